"""
플레이그라운드 기하

노드 위치와 거리 계산 (단위 원판 전파 모델의 기반)
"""

import math
from dataclasses import dataclass

from core.exceptions import ChannelError

PLAYGROUND_SIZE_M = 500.0
COMM_RANGE_M = 500.0


@dataclass(frozen=True, slots=True)
class Position:
    """플레이그라운드 내 좌표 (미터)"""
    x: float
    y: float

    def __post_init__(self):
        if not (0.0 <= self.x <= PLAYGROUND_SIZE_M and 0.0 <= self.y <= PLAYGROUND_SIZE_M):
            raise ChannelError(f"플레이그라운드 범위를 벗어난 위치: ({self.x}, {self.y})")


def distance(a: Position, b: Position) -> float:
    """두 위치 사이의 유클리드 거리"""
    return math.hypot(a.x - b.x, a.y - b.y)


def in_range(a: Position, b: Position) -> bool:
    """통신 범위(500 m) 이내 여부"""
    return distance(a, b) <= COMM_RANGE_M
