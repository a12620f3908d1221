"""
이산 사건 시뮬레이션 커널

정수 마이크로초 시계, (fire_at, seq) 순서의 이벤트 큐, 이름 붙은 난수 스트림을 제공.
시뮬레이터의 나머지 모든 동작은 이 커널 위의 이벤트 핸들러로 실행된다.
"""

import heapq
import itertools
import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Tuple

from core.exceptions import SchedulingError
from core.sim_engine.random_streams import RandomStreams

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class Event:
    """예약된 이벤트 (핸들 역할도 겸함)"""
    fire_at: int
    seq: int
    action: Callable[..., Any]
    args: Tuple[Any, ...] = ()
    cancelled: bool = False

    def cancel(self) -> None:
        """이벤트 무효화 (큐에서 꺼낼 때 건너뜀)"""
        self.cancelled = True


class SimKernel:
    """단일 스레드 이산 사건 커널"""

    def __init__(self, seed: int):
        """
        커널 초기화

        Args:
            seed: 64비트 시드 (난수 스트림 파생용)
        """
        self.now: int = 0
        self.seed = seed
        self.streams = RandomStreams(seed)
        self.processed: int = 0
        # (fire_at, seq, event): 튜플 비교로 힙 정렬
        self._queue: List[Tuple[int, int, Event]] = []
        self._seq = itertools.count()

    def schedule(self, at: int, action: Callable[..., Any], *args: Any) -> Event:
        """
        이벤트 예약

        Args:
            at: 발생 시각 (µs, 현재 시각 이상)
            action: 호출할 핸들러
            *args: 핸들러 인자

        Returns:
            Event: 취소에 사용할 수 있는 이벤트 핸들

        Raises:
            SchedulingError: 과거 시각으로 예약한 경우
        """
        if at < self.now:
            raise SchedulingError(f"과거 시각 예약: at={at}, now={self.now}")
        seq = next(self._seq)
        event = Event(at, seq, action, args)
        heapq.heappush(self._queue, (at, seq, event))
        return event

    def schedule_in(self, delay: int, action: Callable[..., Any], *args: Any) -> Event:
        """현재 시각 기준 상대 지연으로 이벤트 예약"""
        return self.schedule(self.now + delay, action, *args)

    def run_until(self, t_end: int) -> int:
        """
        t_end 이하의 모든 이벤트를 순서대로 처리

        Args:
            t_end: 종료 시각 (µs)

        Returns:
            int: 종료 후 시계 값 (항상 t_end)
        """
        if t_end < self.now:
            raise SchedulingError(f"종료 시각이 현재 시각보다 이릅니다: t_end={t_end}, now={self.now}")

        queue = self._queue
        pop = heapq.heappop
        while queue and queue[0][0] <= t_end:
            fire_at, _, event = pop(queue)
            if event.cancelled:
                continue
            self.now = fire_at
            self.processed += 1
            event.action(*event.args)

        self.now = t_end
        logger.debug(f"커널 실행 완료 - 시각 {t_end} µs, 처리 이벤트 {self.processed}개")
        return self.now

    def draw_uniform_int(self, stream: str, lo: int, hi: int) -> int:
        """지정 스트림에서 [lo, hi] 균등 정수 추출"""
        return self.streams.uniform_int(stream, lo, hi)

    @property
    def pending(self) -> int:
        """큐에 남은 (취소 포함) 이벤트 수"""
        return len(self._queue)
