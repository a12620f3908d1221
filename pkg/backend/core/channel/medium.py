"""
공유 무선 매체와 충돌 모델

단위 원판(500 m) 전파, 캡처 효과 없음. 수신 노드에서 시간적으로 겹치는 두 전송은
모두 손상되며, 자신의 송신과 겹치는 수신도 손상된다(반이중).
"""

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List, Optional, Protocol, Set, Tuple

from core.channel.geometry import Position, distance, COMM_RANGE_M
from core.channel.rates import RateClass, airtime_us, rate_for_distance
from core.exceptions import ChannelError
from core.sim_engine.event_log import EventLog
from core.sim_engine.kernel import SimKernel

if TYPE_CHECKING:
    from core.mac.frames import Frame

logger = logging.getLogger(__name__)


class MediumListener(Protocol):
    """매체 이벤트를 받는 노드 인터페이스"""
    node_id: int

    def on_frame(self, frame: "Frame", tx: "Transmission") -> None: ...

    def on_medium_change(self) -> None: ...

    def on_transmit_end(self, tx: "Transmission") -> None: ...


@dataclass(slots=True, eq=False)
class Transmission:
    """진행 중이거나 끝난 전송"""
    frame: "Frame"
    sender: int
    start: int
    end: int
    rate: RateClass
    corrupted_at: Set[int] = field(default_factory=set)
    decoded_by: Tuple[int, ...] = ()
    finished: bool = False

    @property
    def airtime(self) -> int:
        return self.end - self.start


class Medium:
    """셀 전체가 공유하는 매체"""

    def __init__(
        self,
        kernel: SimKernel,
        positions: Dict[int, Position],
        event_log: Optional[EventLog] = None
    ):
        """
        매체 초기화 (이웃 집합과 링크 전송률은 한 번만 계산)

        Args:
            kernel: 시뮬레이션 커널
            positions: 노드 ID → 위치
            event_log: 송신 기록용 이벤트 로그
        """
        self.kernel = kernel
        self.positions = dict(positions)
        self.event_log = event_log
        self.collisions = 0

        node_ids = sorted(self.positions)
        self._neighbors: Dict[int, Tuple[int, ...]] = {}
        self._rates: Dict[Tuple[int, int], RateClass] = {}
        for a in node_ids:
            near = []
            for b in node_ids:
                if a == b:
                    continue
                d = distance(self.positions[a], self.positions[b])
                self._rates[(a, b)] = rate_for_distance(d)
                if d <= COMM_RANGE_M:
                    near.append(b)
            self._neighbors[a] = tuple(near)

        self._listeners: Dict[int, MediumListener] = {}
        self._busy: Dict[int, int] = {node: 0 for node in node_ids}
        self._receiving: Dict[int, List[Transmission]] = {node: [] for node in node_ids}
        self._transmitting: Dict[int, Optional[Transmission]] = {node: None for node in node_ids}

        logger.debug(f"매체 초기화 완료: 노드 {len(node_ids)}개")

    # ===== 정적 토폴로지 =====

    def attach(self, listener: MediumListener) -> None:
        self._listeners[listener.node_id] = listener

    def neighbors(self, node: int) -> Tuple[int, ...]:
        """통신 범위 내 노드 (ID 오름차순)"""
        return self._neighbors[node]

    def rate(self, src: int, dst: int) -> RateClass:
        """링크 전송률"""
        return self._rates[(src, dst)]

    def in_range(self, a: int, b: int) -> bool:
        return b in self._neighbors[a]

    # ===== 동적 상태 =====

    def is_idle(self, node: int) -> bool:
        """반송파 감지: 범위 내 진행 중인 전송이 없는지"""
        return self._busy[node] == 0

    def is_transmitting(self, node: int) -> bool:
        tx = self._transmitting[node]
        return tx is not None and tx.end > self.kernel.now

    def transmission_of(self, node: int) -> Optional[Transmission]:
        """노드가 진행 중인 전송 (없으면 None)"""
        return self._transmitting[node] if self.is_transmitting(node) else None

    def concurrent_transmissions(self, node: int) -> int:
        """노드에서 현재 들리는 서로 다른 전송 수"""
        now = self.kernel.now
        return sum(1 for tx in self._receiving[node] if tx.end > now)

    def transmit(self, sender: int, frame: "Frame", rate: RateClass) -> Transmission:
        """
        전송 시작

        Args:
            sender: 송신 노드
            frame: 전송 프레임
            rate: 전송률

        Returns:
            Transmission: 종료 시 수신 결과가 채워지는 전송 객체

        Raises:
            ChannelError: 이미 송신 중인 노드가 다시 송신하는 경우
        """
        if self.is_transmitting(sender):
            raise ChannelError(f"노드 {sender}는 이미 송신 중입니다")

        now = self.kernel.now
        tx = Transmission(
            frame=frame,
            sender=sender,
            start=now,
            end=now + airtime_us(frame.size_bytes, rate),
            rate=rate
        )
        self._transmitting[sender] = tx

        # 반이중: 송신자가 듣던 프레임은 모두 손상
        for other in self._receiving[sender]:
            if other.end > now:
                other.corrupted_at.add(sender)

        became_busy = []
        for node in self._neighbors[sender]:
            receiving = self._receiving[node]
            for other in receiving:
                if other.end > now:
                    other.corrupted_at.add(node)
                    tx.corrupted_at.add(node)
            if self.is_transmitting(node):
                tx.corrupted_at.add(node)
            receiving.append(tx)
            self._busy[node] += 1
            if self._busy[node] == 1:
                became_busy.append(node)

        if self.event_log is not None:
            self.event_log.record(
                now, sender, "tx", frame.kind.value, frame.dst, frame.duration_us, tx.end
            )

        self.kernel.schedule(tx.end, self._finish, tx)
        for node in became_busy:
            listener = self._listeners.get(node)
            if listener is not None:
                listener.on_medium_change()
        return tx

    def _finish(self, tx: Transmission) -> None:
        """전송 종료: 수신 결과 확정 후 복호 성공 노드에 전달"""
        tx.finished = True
        if self._transmitting[tx.sender] is tx:
            self._transmitting[tx.sender] = None

        receivers = self._neighbors[tx.sender]
        decoded = []
        for node in receivers:
            self._receiving[node].remove(tx)
            self._busy[node] -= 1
            if node in tx.corrupted_at:
                if tx.frame.dst == node:
                    self.collisions += 1
                    if self.event_log is not None:
                        self.event_log.record(tx.end, node, "collision", tx.sender, tx.frame.kind.value)
            else:
                decoded.append(node)
        tx.decoded_by = tuple(decoded)

        listeners = self._listeners
        for node in decoded:
            listener = listeners.get(node)
            if listener is not None:
                listener.on_frame(tx.frame, tx)

        sender = listeners.get(tx.sender)
        if sender is not None:
            sender.on_transmit_end(tx)

        for node in receivers:
            if self._busy[node] == 0:
                listener = listeners.get(node)
                if listener is not None:
                    listener.on_medium_change()
