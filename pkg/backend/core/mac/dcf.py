"""
DCF 상태 기계

노드별 매체 접근 상태를 순수 함수 dcf_transition 으로 전이시키고,
노드가 실행할 동작(타이머 예약, 송신 등)을 목록으로 돌려준다.
백오프 감소는 슬롯마다 이벤트를 두지 않고, 중단 시 경과 슬롯 수로 환산한다.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Tuple

from core.exceptions import IllegalTransitionError
from core.mac.timing import (
    CTS_TIMEOUT_US, CW_MAX, CW_MIN, DIFS_US, RESPONSE_MARGIN_US, RETRY_LIMIT, SIFS_US,
    SLOT_US, T_RTS_US
)


class DcfPhase(str, Enum):
    """DCF 단계"""
    IDLE = "Idle"
    DIFS = "Difs"
    BACKOFF = "Backoff"
    AWAIT_CTS = "AwaitCts"
    SEND_DATA = "SendData"
    AWAIT_ACK = "AwaitAck"
    QUIET = "Quiet"


class Outcome(str, Enum):
    SUCCESS = "success"
    FAILURE = "failure"


@dataclass(frozen=True, slots=True)
class PendingPayload:
    """송신 대기 페이로드"""
    payload_bytes: int
    exchange_id: int
    queued_at: int


@dataclass(slots=True)
class DcfState:
    """노드별 DCF 상태"""
    phase: DcfPhase = DcfPhase.IDLE
    contention_window: int = CW_MIN
    backoff_slots: Optional[int] = None
    retry_count: int = 0
    pending: Optional[PendingPayload] = None
    backoff_started_at: Optional[int] = None

    def clone(self) -> "DcfState":
        return DcfState(
            self.phase, self.contention_window, self.backoff_slots,
            self.retry_count, self.pending, self.backoff_started_at
        )


class StimulusKind(str, Enum):
    """DCF 자극"""
    PAYLOAD_QUEUED = "payload_queued"
    MEDIUM_BUSY = "medium_busy"      # 매체 사용 중 또는 NAV 설정
    MEDIUM_IDLE = "medium_idle"      # 매체 유휴 및 NAV 만료
    DIFS_ELAPSED = "difs_elapsed"
    BACKOFF_ELAPSED = "backoff_elapsed"
    CTS_DECODED = "cts_decoded"
    DATA_SENT = "data_sent"
    ACK_DECODED = "ack_decoded"
    TIMEOUT = "timeout"
    ABANDON = "abandon"              # 응답을 기다리지 않고 교환 포기 (공격 노드)


@dataclass(frozen=True, slots=True)
class Stimulus:
    kind: StimulusKind
    now: int
    channel_free: bool = True
    payload: Optional[PendingPayload] = None
    # DATA 종료 후 ACK 도착까지 걸리는 시간 (DATA_SENT 전용)
    response_wait_us: int = 0


class ActionKind(str, Enum):
    START_DIFS = "start_difs"
    START_BACKOFF = "start_backoff"
    CANCEL_TIMER = "cancel_timer"
    SEND_RTS = "send_rts"
    ARM_TIMEOUT = "arm_timeout"
    SEND_DATA = "send_data"
    EXCHANGE_SUCCEEDED = "exchange_succeeded"
    EXCHANGE_FAILED = "exchange_failed"
    PAYLOAD_DROPPED = "payload_dropped"


@dataclass(frozen=True, slots=True)
class MacAction:
    kind: ActionKind
    at: int = 0


def escalate_cw(state: DcfState, outcome: Outcome) -> DcfState:
    """
    이진 지수 백오프 갱신

    실패 시 CW를 두 배(+1)로 늘리고 재시도 횟수를 올린다. 재시도 7회에 도달하면
    대기 페이로드를 버리고 초기화한다. 성공 시 CW와 재시도 횟수를 초기화한다.
    """
    new = state.clone()
    if outcome is Outcome.SUCCESS:
        new.contention_window = CW_MIN
        new.retry_count = 0
        return new

    new.contention_window = min(2 * (state.contention_window + 1) - 1, CW_MAX)
    new.retry_count = state.retry_count + 1
    if new.retry_count >= RETRY_LIMIT:
        new.pending = None
        new.contention_window = CW_MIN
        new.retry_count = 0
    return new


def _contend(state: DcfState, stimulus: Stimulus, actions: List[MacAction]) -> None:
    if stimulus.channel_free:
        state.phase = DcfPhase.DIFS
        actions.append(MacAction(ActionKind.START_DIFS, stimulus.now + DIFS_US))
    else:
        state.phase = DcfPhase.QUIET


def _illegal(state: DcfState, stimulus: Stimulus) -> IllegalTransitionError:
    return IllegalTransitionError(state.phase.value, stimulus.kind.value)


def dcf_transition(
    state: DcfState,
    stimulus: Stimulus,
    draw_backoff: Callable[[int], int]
) -> Tuple[DcfState, List[MacAction]]:
    """
    DCF 상태 전이

    Args:
        state: 현재 상태 (변경하지 않음)
        stimulus: 자극
        draw_backoff: CW를 받아 [0, CW] 백오프 슬롯 수를 뽑는 함수

    Returns:
        Tuple[DcfState, List[MacAction]]: 새 상태와 실행할 동작 목록

    Raises:
        IllegalTransitionError: 현재 단계에서 허용되지 않는 자극
    """
    new = state.clone()
    actions: List[MacAction] = []
    kind = stimulus.kind
    phase = state.phase
    now = stimulus.now

    if kind is StimulusKind.PAYLOAD_QUEUED:
        if phase is not DcfPhase.IDLE or state.pending is not None or stimulus.payload is None:
            raise _illegal(state, stimulus)
        new.pending = stimulus.payload
        _contend(new, stimulus, actions)

    elif kind is StimulusKind.MEDIUM_BUSY:
        if phase is DcfPhase.DIFS:
            new.phase = DcfPhase.QUIET
            actions.append(MacAction(ActionKind.CANCEL_TIMER))
        elif phase is DcfPhase.BACKOFF:
            # 완전히 경과한 슬롯만 차감
            elapsed = (now - state.backoff_started_at) // SLOT_US
            new.backoff_slots = max(0, state.backoff_slots - elapsed)
            new.backoff_started_at = None
            new.phase = DcfPhase.QUIET
            actions.append(MacAction(ActionKind.CANCEL_TIMER))

    elif kind is StimulusKind.MEDIUM_IDLE:
        if phase is DcfPhase.QUIET and stimulus.channel_free:
            _contend(new, stimulus, actions)

    elif kind is StimulusKind.DIFS_ELAPSED:
        if phase is not DcfPhase.DIFS:
            raise _illegal(state, stimulus)
        if new.backoff_slots is None:
            new.backoff_slots = draw_backoff(state.contention_window)
        new.phase = DcfPhase.BACKOFF
        new.backoff_started_at = now
        actions.append(MacAction(ActionKind.START_BACKOFF, now + new.backoff_slots * SLOT_US))

    elif kind is StimulusKind.BACKOFF_ELAPSED:
        if phase is not DcfPhase.BACKOFF:
            raise _illegal(state, stimulus)
        new.backoff_slots = None
        new.backoff_started_at = None
        new.phase = DcfPhase.AWAIT_CTS
        actions.append(MacAction(ActionKind.SEND_RTS, now))
        actions.append(MacAction(ActionKind.ARM_TIMEOUT, now + T_RTS_US + CTS_TIMEOUT_US))

    elif kind is StimulusKind.CTS_DECODED:
        if phase is not DcfPhase.AWAIT_CTS:
            raise _illegal(state, stimulus)
        new.phase = DcfPhase.SEND_DATA
        actions.append(MacAction(ActionKind.CANCEL_TIMER))
        actions.append(MacAction(ActionKind.SEND_DATA, now + SIFS_US))

    elif kind is StimulusKind.DATA_SENT:
        if phase is not DcfPhase.SEND_DATA:
            raise _illegal(state, stimulus)
        new.phase = DcfPhase.AWAIT_ACK
        actions.append(
            MacAction(ActionKind.ARM_TIMEOUT, now + stimulus.response_wait_us + RESPONSE_MARGIN_US)
        )

    elif kind is StimulusKind.ACK_DECODED:
        if phase is not DcfPhase.AWAIT_ACK:
            raise _illegal(state, stimulus)
        new = escalate_cw(new, Outcome.SUCCESS)
        new.pending = None
        new.backoff_slots = None
        new.phase = DcfPhase.IDLE
        actions.append(MacAction(ActionKind.CANCEL_TIMER))
        actions.append(MacAction(ActionKind.EXCHANGE_SUCCEEDED))

    elif kind is StimulusKind.TIMEOUT:
        if phase not in (DcfPhase.AWAIT_CTS, DcfPhase.AWAIT_ACK):
            raise _illegal(state, stimulus)
        actions.append(MacAction(ActionKind.EXCHANGE_FAILED))
        new = escalate_cw(new, Outcome.FAILURE)
        new.backoff_slots = None
        if new.pending is None:
            new.phase = DcfPhase.IDLE
            actions.append(MacAction(ActionKind.PAYLOAD_DROPPED))
        else:
            _contend(new, stimulus, actions)

    elif kind is StimulusKind.ABANDON:
        if phase is not DcfPhase.AWAIT_CTS:
            raise _illegal(state, stimulus)
        new.pending = None
        new.backoff_slots = None
        new.phase = DcfPhase.IDLE
        actions.append(MacAction(ActionKind.CANCEL_TIMER))

    return new, actions
