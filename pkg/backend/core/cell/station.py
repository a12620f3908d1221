"""
정상 스테이션

포화 트래픽으로 항상 AP에 보낼 페이로드를 갖는다. RTS 시점에 릴레이를 선택하고,
다른 소스의 릴레이로 선택되면 받은 DATA를 SIFS 뒤 AP로 전달한다.
"""

import logging
from typing import TYPE_CHECKING, Optional

from core.channel.medium import Transmission
from core.channel.rates import BASE_RATE
from core.coop_relay.candidates import record_outcome, select_relay
from core.coop_relay.exchange import ExchangePlan, cooperative_exchange
from core.mac.dcf import DcfPhase, Outcome, PendingPayload, StimulusKind
from core.mac.duration import ResponseRole, derive_response_duration
from core.mac.frames import Frame, FrameKind
from core.mac.timing import CW_MIN, SIFS_US, SLOT_US
from core.cell.node import ContendingNode

if TYPE_CHECKING:
    from core.cell.cell import Cell

logger = logging.getLogger(__name__)

# 릴레이 없음 표기 (이벤트 로그용)
NO_RELAY = -1


class Station(ContendingNode):
    """포화 트래픽 정상 스테이션"""

    def __init__(self, node_id: int, cell: "Cell"):
        super().__init__(node_id, cell)
        self.ap_id = cell.ap_id
        self.payload_bytes = cell.config.payload_bytes
        self.direct_rate = self.medium.rate(node_id, self.ap_id)
        self._plan: Optional[ExchangePlan] = None
        self._cts: Optional[Frame] = None

    def start(self) -> None:
        # 동시 시작 완화를 위한 초기 지연
        jitter = self.kernel.draw_uniform_int("traffic", 0, CW_MIN * SLOT_US)
        self.kernel.schedule(jitter, self._queue_payload)

    def _queue_payload(self) -> None:
        payload = PendingPayload(
            payload_bytes=self.payload_bytes,
            exchange_id=next(self.cell.exchange_ids),
            queued_at=self.kernel.now
        )
        self.dispatch(StimulusKind.PAYLOAD_QUEUED, payload=payload)

    # ===== 소스 역할 =====

    def send_rts(self) -> None:
        pending = self.dcf.pending
        relay = select_relay(
            self.node_id,
            self.cell.candidate_table,
            self.blacklist,
            self.medium.concurrent_transmissions
        )
        self.event_log.record(
            self.kernel.now, self.node_id, "relay_select", NO_RELAY if relay is None else relay
        )

        relay_rates = None
        if relay is not None:
            candidate = self.cell.candidate_table.candidate(self.node_id, relay)
            relay_rates = (candidate.rate_to_relay, candidate.rate_to_ap)
        self._plan = cooperative_exchange(
            self.node_id, relay, self.ap_id, pending.payload_bytes, self.direct_rate, relay_rates
        )

        rts = Frame(
            kind=FrameKind.RTS,
            src=self.node_id,
            dst=self.ap_id,
            duration_us=self._plan.reservation_us,
            exchange_id=pending.exchange_id
        )
        self.medium.transmit(self.node_id, rts, BASE_RATE)
        self.cell.counters.rts_sent += 1

    def send_data(self) -> None:
        plan = self._plan
        pending = self.dcf.pending
        source_data = plan.frames[1]
        if plan.relay is None:
            duration = derive_response_duration(self._cts, ResponseRole.DIRECT_DATA)
            relay_flag = False
        else:
            duration = derive_response_duration(
                self._cts, ResponseRole.RELAY_DATA, pending.payload_bytes, plan.frames[2].rate
            )
            relay_flag = True

        data = Frame(
            kind=FrameKind.DATA,
            src=self.node_id,
            dst=source_data.dst,
            duration_us=duration,
            payload_bytes=pending.payload_bytes,
            relay_flag=relay_flag,
            origin=self.node_id,
            exchange_id=pending.exchange_id
        )
        self.medium.transmit(self.node_id, data, source_data.rate)

    def on_transmit_end(self, tx: Transmission) -> None:
        frame = tx.frame
        if (
            frame.kind is FrameKind.DATA
            and frame.origin == self.node_id
            and self._plan is not None
        ):
            self.dispatch(StimulusKind.DATA_SENT, response_wait_us=self._plan.ack_wait_us)
        self.reevaluate()

    def _selected_relay(self) -> Optional[int]:
        """진행 중인 교환에서 선택한 릴레이 (직접 전송이면 None)"""
        return self._plan.relay if self._plan is not None else None

    def on_exchange_succeeded(self) -> None:
        if self._selected_relay() is not None:
            record_outcome(self.cell.candidate_table, self.node_id, self._plan.relay, Outcome.SUCCESS)
        self._finish_exchange()
        self.kernel.schedule(self.kernel.now, self._queue_payload)

    def on_exchange_failed(self) -> None:
        # CTS 시간 초과도 선택된 릴레이의 실패로 반영
        if self._selected_relay() is not None:
            record_outcome(self.cell.candidate_table, self.node_id, self._plan.relay, Outcome.FAILURE)
            self.cell.counters.relay_failures += 1
        self._finish_exchange()

    def on_payload_dropped(self) -> None:
        self.cell.counters.dropped += 1
        logger.debug(f"노드 {self.node_id}: 재시도 한도 초과로 페이로드 폐기 (t={self.kernel.now} µs)")
        self.kernel.schedule(self.kernel.now, self._queue_payload)

    def _finish_exchange(self) -> None:
        self._plan = None
        self._cts = None

    # ===== 수신 =====

    def on_addressed(self, frame: Frame, tx: Transmission) -> None:
        pending = self.dcf.pending
        current = pending is not None and frame.exchange_id == pending.exchange_id
        if frame.kind is FrameKind.CTS:
            if current and self.dcf.phase is DcfPhase.AWAIT_CTS:
                self._cts = frame
                self.dispatch(StimulusKind.CTS_DECODED)
        elif frame.kind is FrameKind.ACK:
            if current and self.dcf.phase is DcfPhase.AWAIT_ACK:
                self.dispatch(StimulusKind.ACK_DECODED)
        elif frame.kind is FrameKind.DATA and frame.relay_flag:
            self.kernel.schedule(self.kernel.now + SIFS_US, self._forward, frame)

    def _forward(self, frame: Frame) -> None:
        """릴레이로서 받은 DATA를 AP로 전달"""
        if self.medium.is_transmitting(self.node_id):
            return
        forward = Frame(
            kind=FrameKind.DATA,
            src=self.node_id,
            dst=self.ap_id,
            duration_us=derive_response_duration(frame, ResponseRole.DIRECT_DATA),
            payload_bytes=frame.payload_bytes,
            origin=frame.origin,
            exchange_id=frame.exchange_id
        )
        self.medium.transmit(self.node_id, forward, self.medium.rate(self.node_id, self.ap_id))
