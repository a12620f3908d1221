"""
노드 공통 동작

모든 노드(AP, 스테이션, 공격 노드)는 블랙리스트와 NAV를 가지며, 복호한 프레임을
브로드캐스트 / 자신에게 온 프레임 / 엿들은 프레임으로 나누어 처리한다.
DCF로 매체에 접근하는 노드는 ContendingNode를 상속한다.
"""

import logging
from typing import TYPE_CHECKING, Optional

from core.channel.medium import Transmission
from core.defense.blacklist import Blacklist
from core.defense.revalidation import apply_blacklist
from core.mac.dcf import (
    ActionKind, DcfPhase, DcfState, MacAction, Stimulus, StimulusKind, dcf_transition
)
from core.mac.frames import Frame, FrameKind
from core.mac.nav import NavTimer, update_nav
from core.sim_engine.kernel import Event
from utils.logging_constants import LogFormat, format_log_message

if TYPE_CHECKING:
    from core.cell.cell import Cell

logger = logging.getLogger(__name__)


class Node:
    """셀에 속한 노드 (매체 리스너)"""

    def __init__(self, node_id: int, cell: "Cell"):
        self.node_id = node_id
        self.cell = cell
        self.kernel = cell.kernel
        self.medium = cell.medium
        self.event_log = cell.event_log
        self.blacklist = Blacklist()
        self.nav = NavTimer()
        self._nav_wake: Optional[Event] = None

    def start(self) -> None:
        """시뮬레이션 시작 시 호출"""

    # ===== 매체 이벤트 =====

    def channel_free(self) -> bool:
        """물리/가상 반송파 감지가 모두 유휴이고 자신도 송신 중이 아닌지"""
        now = self.kernel.now
        return (
            self.medium.is_idle(self.node_id)
            and not self.nav.is_quiet(now, self.blacklist)
            and not self.medium.is_transmitting(self.node_id)
        )

    def on_frame(self, frame: Frame, tx: Transmission) -> None:
        if frame.kind is FrameKind.BLACKLIST:
            self.on_blacklist(frame)
        elif frame.dst == self.node_id:
            self.on_addressed(frame, tx)
        else:
            self._overhear(frame, tx)

    def on_medium_change(self) -> None:
        self.reevaluate()

    def on_transmit_end(self, tx: Transmission) -> None:
        self.reevaluate()

    def on_addressed(self, frame: Frame, tx: Transmission) -> None:
        """자신에게 온 프레임 처리"""

    def reevaluate(self) -> None:
        """반송파 상태가 바뀌었을 때 호출"""

    # ===== NAV / 블랙리스트 =====

    def _overhear(self, frame: Frame, tx: Transmission) -> None:
        updated = update_nav(self.nav, frame, tx.end, self.blacklist)
        if updated is self.nav:
            return
        self.nav = updated
        self.event_log.record(self.kernel.now, self.node_id, "nav", updated.quiet_until, updated.set_by)
        if self._nav_wake is not None:
            self._nav_wake.cancel()
        self._nav_wake = self.kernel.schedule(updated.quiet_until, self._on_nav_expired)
        self.reevaluate()

    def _on_nav_expired(self) -> None:
        self._nav_wake = None
        self.reevaluate()

    def on_blacklist(self, frame: Frame) -> None:
        """BLACKLIST 브로드캐스트 수신"""
        now = self.kernel.now
        if not apply_blacklist(self.blacklist, frame, now):
            return
        self.event_log.record(now, self.node_id, "blacklist", frame.offender)
        logger.debug(format_log_message(
            LogFormat.BLACKLIST_APPLY, node=self.node_id, offender=frame.offender, at=now
        ))
        # 공격 노드가 설정한 NAV는 즉시 만료
        self.reevaluate()


class ContendingNode(Node):
    """DCF로 매체에 접근하는 노드"""

    def __init__(self, node_id: int, cell: "Cell"):
        super().__init__(node_id, cell)
        self.dcf = DcfState()
        self._timer: Optional[Event] = None

    def reevaluate(self) -> None:
        phase = self.dcf.phase
        if phase in (DcfPhase.DIFS, DcfPhase.BACKOFF):
            if self.channel_free():
                return
            # 같은 슬롯에서 백오프가 끝난 노드는 감지하지 못하고 송신한다 (충돌)
            if (
                phase is DcfPhase.BACKOFF
                and self._timer is not None
                and self._timer.fire_at == self.kernel.now
            ):
                return
            self.dispatch(StimulusKind.MEDIUM_BUSY, channel_free=False)
        elif phase is DcfPhase.QUIET and self.channel_free():
            self.dispatch(StimulusKind.MEDIUM_IDLE, channel_free=True)

    def dispatch(self, kind: StimulusKind, channel_free: Optional[bool] = None, **fields) -> None:
        """자극을 DCF에 전달하고 결과 동작 실행 (channel_free는 이미 감지한 값)"""
        if channel_free is None:
            channel_free = self.channel_free()
        stimulus = Stimulus(kind, self.kernel.now, channel_free=channel_free, **fields)
        self.dcf, actions = dcf_transition(self.dcf, stimulus, self._draw_backoff)
        for action in actions:
            self.perform(action)

    def perform(self, action: MacAction) -> None:
        kind = action.kind
        if kind is ActionKind.START_DIFS:
            self._arm(action.at, StimulusKind.DIFS_ELAPSED)
        elif kind is ActionKind.START_BACKOFF:
            self._arm(action.at, StimulusKind.BACKOFF_ELAPSED)
        elif kind is ActionKind.ARM_TIMEOUT:
            self._arm(action.at, StimulusKind.TIMEOUT)
        elif kind is ActionKind.CANCEL_TIMER:
            self._cancel_timer()
        elif kind is ActionKind.SEND_RTS:
            self.send_rts()
        elif kind is ActionKind.SEND_DATA:
            self.kernel.schedule(action.at, self.send_data)
        elif kind is ActionKind.EXCHANGE_SUCCEEDED:
            self.on_exchange_succeeded()
        elif kind is ActionKind.EXCHANGE_FAILED:
            self.on_exchange_failed()
        elif kind is ActionKind.PAYLOAD_DROPPED:
            self.on_payload_dropped()

    def _draw_backoff(self, contention_window: int) -> int:
        return self.kernel.draw_uniform_int("backoff", 0, contention_window)

    def _arm(self, at: int, kind: StimulusKind) -> None:
        self._cancel_timer()
        self._timer = self.kernel.schedule(at, self._fire, kind)

    def _cancel_timer(self) -> None:
        if self._timer is not None:
            self._timer.cancel()
            self._timer = None

    def _fire(self, kind: StimulusKind) -> None:
        self._timer = None
        if kind is StimulusKind.BACKOFF_ELAPSED and self.medium.is_transmitting(self.node_id):
            # 릴레이 전달 중에는 RTS를 보낼 수 없으므로 남은 슬롯 0으로 동결
            self.dispatch(StimulusKind.MEDIUM_BUSY)
            return
        self.dispatch(kind)

    # ===== 하위 클래스 훅 =====

    def send_rts(self) -> None:
        raise NotImplementedError

    def send_data(self) -> None:
        raise NotImplementedError

    def on_exchange_succeeded(self) -> None:
        pass

    def on_exchange_failed(self) -> None:
        pass

    def on_payload_dropped(self) -> None:
        pass
