"""
공격 노드

정상 트래픽을 만들지 않고, 릴레이로 선택되어도 DATA를 전달하지 않는다.
"""

import logging
from typing import TYPE_CHECKING

from core.channel.rates import BASE_RATE
from core.mac.dcf import ActionKind, MacAction, PendingPayload, StimulusKind
from core.mac.duration import compute_duration
from core.cell.node import ContendingNode, Node
from core.threat.attacks import next_attack_frame
from models.scenario_models import AttackerConfig

if TYPE_CHECKING:
    from core.cell.cell import Cell

logger = logging.getLogger(__name__)


class InflationAttacker(ContendingNode):
    """duration을 부풀린 RTS를 보내는 노드 (DCF 준수, CTS 무시)"""

    def __init__(self, node_id: int, cell: "Cell", attack: AttackerConfig):
        super().__init__(node_id, cell)
        self.attack = attack
        self.ap_id = cell.ap_id
        self._next_fire = attack.start_at_us

    def start(self) -> None:
        self.kernel.schedule(self.attack.start_at_us, self._queue)

    def _queue(self) -> None:
        token = PendingPayload(payload_bytes=0, exchange_id=-self.node_id, queued_at=self.kernel.now)
        self.dispatch(StimulusKind.PAYLOAD_QUEUED, payload=token)

    def perform(self, action: MacAction) -> None:
        if action.kind is ActionKind.ARM_TIMEOUT:
            # 응답을 기다리지 않고 교환 포기
            self._timer = self.kernel.schedule(self.kernel.now, self._abandon)
            return
        super().perform(action)

    def send_rts(self) -> None:
        frame, self._next_fire = next_attack_frame(self.attack, self.kernel.now, self.ap_id, 0)
        self.medium.transmit(self.node_id, frame, BASE_RATE)
        self.cell.counters.rts_sent += 1
        logger.debug(f"공격 노드 {self.node_id}: 위조 RTS {frame.duration_us} µs (t={self.kernel.now} µs)")

    def _abandon(self) -> None:
        self._timer = None
        self.dispatch(StimulusKind.ABANDON)
        self.kernel.schedule(self._next_fire, self._queue)


class FloodAttacker(Node):
    """주기적으로 RTS를 보내는 노드 (NAV, 백오프, CTS 무시)"""

    def __init__(self, node_id: int, cell: "Cell", attack: AttackerConfig):
        super().__init__(node_id, cell)
        self.attack = attack
        self.ap_id = cell.ap_id
        direct = self.medium.rate(node_id, self.ap_id)
        self.legit_duration_us = compute_duration(cell.config.payload_bytes, direct)

    def start(self) -> None:
        self.kernel.schedule(self.attack.start_at_us, self._fire)

    def _fire(self) -> None:
        frame, next_fire = next_attack_frame(
            self.attack, self.kernel.now, self.ap_id, self.legit_duration_us
        )
        if not self.medium.is_transmitting(self.node_id):
            self.medium.transmit(self.node_id, frame, BASE_RATE)
            self.cell.counters.rts_sent += 1
        self.kernel.schedule(next_fire, self._fire)
