"""
MAC 테스트 (프레임, duration, NAV, DCF 상태 기계)
"""

import pytest

from core.channel.rates import RateClass
from core.exceptions import ChannelError, DurationOverflowError, IllegalTransitionError
from core.mac import (
    ActionKind,
    DcfPhase,
    DcfState,
    Frame,
    FrameKind,
    NavTimer,
    Outcome,
    PendingPayload,
    ResponseRole,
    Stimulus,
    StimulusKind,
    compute_duration,
    dcf_transition,
    derive_response_duration,
    escalate_cw,
    update_nav,
)
from core.mac.timing import CONTENTION_WINDOWS, CW_MIN, T_ACK_US, T_CTS_US, T_RTS_US

R1, R2, R5, R11 = RateClass.MBPS_1, RateClass.MBPS_2, RateClass.MBPS_5_5, RateClass.MBPS_11


def fixed_draw(slots):
    """항상 같은 슬롯 수를 돌려주는 백오프 추출기 (호출된 CW 기록)"""
    calls = []

    def _draw(cw):
        calls.append(cw)
        return slots
    _draw.calls = calls
    return _draw


def step(state, kind, now, draw=None, **fields):
    return dcf_transition(state, Stimulus(kind, now, **fields), draw or fixed_draw(0))


def kinds(actions):
    return [a.kind for a in actions]


PAYLOAD = PendingPayload(payload_bytes=2048, exchange_id=1, queued_at=0)


class TestFrames:
    def test_sizes(self):
        assert Frame(kind=FrameKind.RTS, src=1, dst=0, duration_us=0).size_bytes == 20
        assert Frame(kind=FrameKind.CTS, src=0, dst=1, duration_us=0).size_bytes == 14
        data = Frame(kind=FrameKind.DATA, src=1, dst=0, duration_us=122, payload_bytes=2048)
        assert data.size_bytes == 2076

    def test_duration_field_limit(self):
        Frame(kind=FrameKind.RTS, src=1, dst=0, duration_us=32767)
        with pytest.raises(DurationOverflowError):
            Frame(kind=FrameKind.RTS, src=1, dst=0, duration_us=32768)

    def test_control_frame_cannot_carry_payload(self):
        with pytest.raises(ValueError):
            Frame(kind=FrameKind.RTS, src=1, dst=0, duration_us=0, payload_bytes=10)

    def test_blacklist_requires_offender(self):
        with pytest.raises(ValueError):
            Frame(kind=FrameKind.BLACKLIST, src=0, dst=-1, duration_us=0)

    def test_control_airtimes(self):
        assert (T_RTS_US, T_CTS_US, T_ACK_US) == (160, 112, 112)


class TestDuration:
    def test_direct_exchange(self):
        assert compute_duration(2048, R11) == 1764
        assert compute_duration(2048, R1) == 16862

    def test_cooperative_exchange(self):
        assert compute_duration(2048, R2, (R11, R5)) == 4794

    def test_empty_payload_has_no_data_airtime(self):
        assert compute_duration(0, R1) == 254

    def test_overflow_rejected(self):
        with pytest.raises(DurationOverflowError):
            compute_duration(5000, R1)

    def test_relay_hop_must_be_faster(self):
        with pytest.raises(ValueError):
            compute_duration(2048, R5, (R11, R5))

    def test_unreachable_relay_hop_rejected(self):
        with pytest.raises(ChannelError):
            compute_duration(2048, R1, (R11, RateClass.UNREACHABLE))

    def test_cts_inherits_rts_reservation(self):
        rts = Frame(kind=FrameKind.RTS, src=1, dst=0, duration_us=1764)
        assert derive_response_duration(rts, ResponseRole.CTS) == 1642

    def test_cts_duration_clamped_at_zero(self):
        rts = Frame(kind=FrameKind.RTS, src=1, dst=0, duration_us=50)
        assert derive_response_duration(rts, ResponseRole.CTS) == 0

    def test_reservation_chain_ends_together(self):
        """각 응답 프레임의 종료 시각 + duration이 RTS 예약 종료와 같음"""
        reserved = compute_duration(2048, R2, (R11, R5))
        rts = Frame(kind=FrameKind.RTS, src=1, dst=0, duration_us=reserved)
        cts_duration = derive_response_duration(rts, ResponseRole.CTS)
        cts = Frame(kind=FrameKind.CTS, src=0, dst=1, duration_us=cts_duration)
        relay_duration = derive_response_duration(cts, ResponseRole.RELAY_DATA, 2048, R5)

        cts_end = 10 + T_CTS_US
        relay_data_end = cts_end + 10 + 1510
        assert cts_end + cts_duration == reserved
        assert relay_data_end + relay_duration == reserved

    def test_data_and_ack_durations(self):
        cts = Frame(kind=FrameKind.CTS, src=0, dst=1, duration_us=1642)
        assert derive_response_duration(cts, ResponseRole.DIRECT_DATA) == 122
        data = Frame(kind=FrameKind.DATA, src=1, dst=0, duration_us=122, payload_bytes=2048)
        assert derive_response_duration(data, ResponseRole.ACK) == 0

    def test_relay_data_requires_forward_rate(self):
        cts = Frame(kind=FrameKind.CTS, src=0, dst=1, duration_us=1642)
        with pytest.raises(ValueError):
            derive_response_duration(cts, ResponseRole.RELAY_DATA, 2048)


class TestNav:
    def test_overheard_frame_sets_nav(self):
        frame = Frame(kind=FrameKind.CTS, src=0, dst=1, duration_us=1642)
        nav = update_nav(NavTimer(), frame, frame_end=1000)
        assert nav == NavTimer(quiet_until=2642, set_by=0)
        assert nav.is_quiet(2641)
        assert not nav.is_quiet(2642)

    def test_nav_never_shrinks(self):
        nav = NavTimer(quiet_until=5000, set_by=3)
        short = Frame(kind=FrameKind.RTS, src=2, dst=0, duration_us=100)
        assert update_nav(nav, short, frame_end=1000) is nav

    def test_blacklisted_sender_ignored(self):
        forged = Frame(kind=FrameKind.RTS, src=9, dst=0, duration_us=32767)
        nav = NavTimer()
        assert update_nav(nav, forged, frame_end=100, blacklist={9}) is nav

    def test_nav_from_blacklisted_sender_expires(self):
        nav = NavTimer(quiet_until=40000, set_by=9)
        assert nav.is_quiet(1000)
        assert not nav.is_quiet(1000, blacklist={9})

        honest = Frame(kind=FrameKind.RTS, src=2, dst=0, duration_us=1764)
        updated = update_nav(nav, honest, frame_end=1000, blacklist={9})
        assert updated == NavTimer(quiet_until=2764, set_by=2)


class TestEscalateCw:
    def test_window_doubles_until_cap(self):
        state = DcfState(pending=PAYLOAD)
        windows = []
        for _ in range(6):
            state = escalate_cw(state, Outcome.FAILURE)
            windows.append(state.contention_window)
        assert windows == [63, 127, 255, 511, 1023, 1023]
        assert state.retry_count == 6
        assert state.pending == PAYLOAD

    def test_retry_limit_drops_payload(self):
        state = DcfState(pending=PAYLOAD)
        for _ in range(7):
            state = escalate_cw(state, Outcome.FAILURE)
        assert state.pending is None
        assert state.contention_window == CW_MIN
        assert state.retry_count == 0

    def test_success_resets(self):
        state = DcfState(contention_window=255, retry_count=3, pending=PAYLOAD)
        state = escalate_cw(state, Outcome.SUCCESS)
        assert state.contention_window == CW_MIN
        assert state.retry_count == 0

    def test_window_values_are_known_sizes(self):
        state = DcfState(pending=PAYLOAD)
        for _ in range(6):
            state = escalate_cw(state, Outcome.FAILURE)
            assert state.contention_window in CONTENTION_WINDOWS


class TestDcfTransition:
    def test_input_state_not_mutated(self):
        state = DcfState()
        step(state, StimulusKind.PAYLOAD_QUEUED, 0, payload=PAYLOAD)
        assert state == DcfState()

    def test_clone_copies_every_field(self):
        state = DcfState(
            phase=DcfPhase.BACKOFF, contention_window=127, backoff_slots=9,
            retry_count=2, pending=PAYLOAD, backoff_started_at=440
        )
        copy = state.clone()
        assert copy == state and copy is not state
        copy.backoff_slots = 0
        assert state.backoff_slots == 9

    def test_escalation_leaves_input_untouched(self):
        state = DcfState(contention_window=63, retry_count=1, pending=PAYLOAD)
        escalate_cw(state, Outcome.FAILURE)
        assert state == DcfState(contention_window=63, retry_count=1, pending=PAYLOAD)

    def test_queued_payload_on_idle_channel_starts_difs(self):
        state, actions = step(DcfState(), StimulusKind.PAYLOAD_QUEUED, 100, payload=PAYLOAD)
        assert state.phase is DcfPhase.DIFS
        assert state.pending == PAYLOAD
        assert kinds(actions) == [ActionKind.START_DIFS]
        assert actions[0].at == 150

    def test_queued_payload_on_busy_channel_waits(self):
        state, actions = step(
            DcfState(), StimulusKind.PAYLOAD_QUEUED, 100, payload=PAYLOAD, channel_free=False
        )
        assert state.phase is DcfPhase.QUIET
        assert actions == []

    def test_difs_then_backoff(self):
        draw = fixed_draw(5)
        state = DcfState(phase=DcfPhase.DIFS, pending=PAYLOAD)
        state, actions = step(state, StimulusKind.DIFS_ELAPSED, 150, draw)

        assert draw.calls == [CW_MIN]
        assert state.phase is DcfPhase.BACKOFF
        assert state.backoff_slots == 5
        assert actions[0].kind is ActionKind.START_BACKOFF
        assert actions[0].at == 250

    def test_busy_during_difs_cancels(self):
        state = DcfState(phase=DcfPhase.DIFS, pending=PAYLOAD)
        state, actions = step(state, StimulusKind.MEDIUM_BUSY, 120)
        assert state.phase is DcfPhase.QUIET
        assert kinds(actions) == [ActionKind.CANCEL_TIMER]

    def test_backoff_freezes_on_whole_slots_and_resumes(self):
        state = DcfState(
            phase=DcfPhase.BACKOFF, pending=PAYLOAD, backoff_slots=10, backoff_started_at=100
        )
        # 3개 슬롯 + 5 µs 경과: 부분 슬롯은 차감하지 않음
        state, actions = step(state, StimulusKind.MEDIUM_BUSY, 165)
        assert state.phase is DcfPhase.QUIET
        assert state.backoff_slots == 7
        assert kinds(actions) == [ActionKind.CANCEL_TIMER]

        state, actions = step(state, StimulusKind.MEDIUM_IDLE, 1000)
        assert state.phase is DcfPhase.DIFS

        draw = fixed_draw(30)
        state, actions = step(state, StimulusKind.DIFS_ELAPSED, 1050, draw)
        assert draw.calls == []
        assert actions[0].at == 1050 + 7 * 20

    def test_medium_idle_ignored_when_channel_still_blocked(self):
        state = DcfState(phase=DcfPhase.QUIET, pending=PAYLOAD)
        new, actions = step(state, StimulusKind.MEDIUM_IDLE, 10, channel_free=False)
        assert new.phase is DcfPhase.QUIET
        assert actions == []

    def test_backoff_expiry_sends_rts_and_arms_cts_timeout(self):
        state = DcfState(
            phase=DcfPhase.BACKOFF, pending=PAYLOAD, backoff_slots=0, backoff_started_at=500
        )
        state, actions = step(state, StimulusKind.BACKOFF_ELAPSED, 500)
        assert state.phase is DcfPhase.AWAIT_CTS
        assert state.backoff_slots is None
        assert kinds(actions) == [ActionKind.SEND_RTS, ActionKind.ARM_TIMEOUT]
        assert actions[1].at == 500 + 160 + 162

    def test_full_successful_exchange(self):
        state = DcfState(phase=DcfPhase.AWAIT_CTS, pending=PAYLOAD, contention_window=127,
                         retry_count=2)

        state, actions = step(state, StimulusKind.CTS_DECODED, 1000)
        assert state.phase is DcfPhase.SEND_DATA
        assert kinds(actions) == [ActionKind.CANCEL_TIMER, ActionKind.SEND_DATA]
        assert actions[1].at == 1010

        state, actions = step(state, StimulusKind.DATA_SENT, 2520, response_wait_us=122)
        assert state.phase is DcfPhase.AWAIT_ACK
        assert actions[0].at == 2520 + 122 + 40

        state, actions = step(state, StimulusKind.ACK_DECODED, 2642)
        assert state.phase is DcfPhase.IDLE
        assert state.pending is None
        assert state.contention_window == CW_MIN
        assert state.retry_count == 0
        assert ActionKind.EXCHANGE_SUCCEEDED in kinds(actions)

    def test_timeout_escalates_and_recontends(self):
        state = DcfState(phase=DcfPhase.AWAIT_CTS, pending=PAYLOAD)
        state, actions = step(state, StimulusKind.TIMEOUT, 822)
        assert kinds(actions) == [ActionKind.EXCHANGE_FAILED, ActionKind.START_DIFS]
        assert state.phase is DcfPhase.DIFS
        assert state.contention_window == 63
        assert state.retry_count == 1
        assert state.pending == PAYLOAD

    def test_seventh_timeout_drops_payload(self):
        state = DcfState(phase=DcfPhase.AWAIT_ACK, pending=PAYLOAD, contention_window=1023,
                         retry_count=6)
        state, actions = step(state, StimulusKind.TIMEOUT, 5000)
        assert kinds(actions) == [ActionKind.EXCHANGE_FAILED, ActionKind.PAYLOAD_DROPPED]
        assert state.phase is DcfPhase.IDLE
        assert state.pending is None
        assert state.contention_window == CW_MIN

    def test_abandon_returns_to_idle_without_escalation(self):
        state = DcfState(phase=DcfPhase.AWAIT_CTS, pending=PAYLOAD)
        state, actions = step(state, StimulusKind.ABANDON, 160)
        assert state.phase is DcfPhase.IDLE
        assert state.pending is None
        assert state.contention_window == CW_MIN
        assert kinds(actions) == [ActionKind.CANCEL_TIMER]

    @pytest.mark.parametrize("phase, kind", [
        (DcfPhase.IDLE, StimulusKind.CTS_DECODED),
        (DcfPhase.IDLE, StimulusKind.ACK_DECODED),
        (DcfPhase.BACKOFF, StimulusKind.TIMEOUT),
        (DcfPhase.AWAIT_ACK, StimulusKind.CTS_DECODED),
        (DcfPhase.QUIET, StimulusKind.DIFS_ELAPSED),
        (DcfPhase.AWAIT_ACK, StimulusKind.ABANDON),
    ])
    def test_illegal_stimulus_raises(self, phase, kind):
        with pytest.raises(IllegalTransitionError):
            step(DcfState(phase=phase, pending=PAYLOAD), kind, 0)

    def test_payload_queued_twice_raises(self):
        state = DcfState(phase=DcfPhase.DIFS, pending=PAYLOAD)
        with pytest.raises(IllegalTransitionError):
            step(state, StimulusKind.PAYLOAD_QUEUED, 0, payload=PAYLOAD)
