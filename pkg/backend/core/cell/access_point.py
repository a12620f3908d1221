"""
액세스 포인트

모든 스테이션의 수신 노드. RTS에 CTS로, DATA에 ACK로 응답한다 (SIFS 뒤, 반송파 감지 없음).
방어가 켜져 있으면 RTS마다 예약 시간을 재검증하고, 악성 송신자를 블랙리스트에 올려
BLACKLIST 프레임을 한 번 브로드캐스트한다.
"""

import logging
from typing import TYPE_CHECKING, Set

from core.channel.medium import Transmission
from core.channel.rates import BASE_RATE
from core.defense.revalidation import on_malicious, validate_rts
from core.mac.duration import ResponseRole, derive_response_duration
from core.mac.frames import Frame, FrameKind
from core.mac.timing import SIFS_US
from core.cell.node import Node
from utils.logging_constants import LogFormat, format_log_message

if TYPE_CHECKING:
    from core.cell.cell import Cell

logger = logging.getLogger(__name__)


class AccessPoint(Node):
    """AP (재검증 지점)"""

    def __init__(self, node_id: int, cell: "Cell"):
        super().__init__(node_id, cell)
        self.defense_enabled = cell.config.defense_enabled
        self.ceiling_us = cell.ceiling_us
        self.payload_bytes = cell.config.payload_bytes
        self._delivered: Set[int] = set()

    def on_addressed(self, frame: Frame, tx: Transmission) -> None:
        if frame.kind is FrameKind.RTS:
            self._on_rts(frame, tx)
        elif frame.kind is FrameKind.DATA:
            self._on_data(frame)

    # ===== RTS =====

    def _on_rts(self, frame: Frame, tx: Transmission) -> None:
        now = self.kernel.now
        counters = self.cell.counters
        if frame.src in self.cell.forging_ids and counters.first_forged_decode_us is None:
            counters.first_forged_decode_us = now

        if frame.src in self.blacklist:
            return

        if self.defense_enabled:
            verdict = validate_rts(frame, self.ceiling_us)
            if verdict.is_malicious:
                self._on_detection(frame, verdict.threshold_us, tx.end)
                return

        if self.nav.is_quiet(now, self.blacklist):
            return
        self.kernel.schedule(now + SIFS_US, self._send_cts, frame)

    def _on_detection(self, frame: Frame, threshold_us: int, rts_end: int) -> None:
        result = on_malicious(self.blacklist, frame.src, self.node_id, rts_end)
        if result is None:
            return
        bcast, send_at = result

        counters = self.cell.counters
        if frame.src in self.cell.attacker_ids:
            counters.detections += 1
            logger.info(format_log_message(
                LogFormat.DETECTION,
                offender=frame.src,
                claimed_us=frame.duration_us,
                threshold_us=threshold_us,
                at=rts_end
            ))
        else:
            counters.false_positives += 1
            logger.warning(format_log_message(LogFormat.FALSE_POSITIVE, offender=frame.src, at=rts_end))
        if counters.first_detection_us is None:
            counters.first_detection_us = rts_end

        self.event_log.record(rts_end, self.node_id, "detect", frame.src, frame.duration_us)
        self.kernel.schedule(send_at, self._broadcast, bcast)

    def _send_cts(self, rts: Frame) -> None:
        if self.medium.is_transmitting(self.node_id):
            return
        cts = Frame(
            kind=FrameKind.CTS,
            src=self.node_id,
            dst=rts.src,
            duration_us=derive_response_duration(rts, ResponseRole.CTS),
            exchange_id=rts.exchange_id
        )
        self.medium.transmit(self.node_id, cts, BASE_RATE)

    def _broadcast(self, bcast: Frame) -> None:
        busy = self.medium.transmission_of(self.node_id)
        if busy is not None:
            self.kernel.schedule(busy.end + SIFS_US, self._broadcast, bcast)
            return
        tx = self.medium.transmit(self.node_id, bcast, BASE_RATE)
        self.cell.counters.broadcast_airtime_us += tx.airtime

    # ===== DATA =====

    def _on_data(self, frame: Frame) -> None:
        # 블랙리스트된 노드가 전달한 DATA는 버림
        if frame.src in self.blacklist:
            return

        exchange_id = frame.exchange_id
        if exchange_id not in self._delivered:
            self._delivered.add(exchange_id)
            counters = self.cell.counters
            counters.delivered_exchanges += 1
            counters.per_node_delivered_bits[frame.origin] += 8 * frame.payload_bytes
            if frame.src != frame.origin:
                counters.relayed_exchanges += 1
            self.event_log.record(self.kernel.now, self.node_id, "deliver", frame.origin, exchange_id)

        self.kernel.schedule(self.kernel.now + SIFS_US, self._send_ack, frame)

    def _send_ack(self, data: Frame) -> None:
        if self.medium.is_transmitting(self.node_id):
            return
        ack = Frame(
            kind=FrameKind.ACK,
            src=self.node_id,
            dst=data.origin,
            duration_us=derive_response_duration(data, ResponseRole.ACK),
            exchange_id=data.exchange_id
        )
        self.medium.transmit(self.node_id, ack, BASE_RATE)
