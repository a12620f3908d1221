"""
거리 기반 전송률 적응과 프레임 전송 시간

전송률은 0.1 Mbps 단위 정수로 보관하여 전송 시간 계산을 정수 연산으로 유지
"""

from enum import IntEnum
from typing import Tuple

from core.exceptions import ChannelError


class RateClass(IntEnum):
    """전송률 등급 (값: 0.1 Mbps 단위)"""
    MBPS_11 = 110
    MBPS_5_5 = 55
    MBPS_2 = 20
    MBPS_1 = 10
    UNREACHABLE = 0

    @property
    def mbps(self) -> float:
        return self.value / 10

    @property
    def reachable(self) -> bool:
        return self is not RateClass.UNREACHABLE


# 거리 상한(m) → 전송률
RATE_TABLE: Tuple[Tuple[float, RateClass], ...] = (
    (125.0, RateClass.MBPS_11),
    (250.0, RateClass.MBPS_5_5),
    (375.0, RateClass.MBPS_2),
    (500.0, RateClass.MBPS_1),
)

# 제어 프레임(RTS/CTS/ACK/BLACKLIST)은 항상 기본 전송률
BASE_RATE = RateClass.MBPS_1

REACHABLE_RATES: Tuple[RateClass, ...] = tuple(rate for _, rate in RATE_TABLE)


def rate_for_distance(d: float) -> RateClass:
    """
    거리에 따른 전송률 결정

    Args:
        d: 송수신 거리 (m)

    Returns:
        RateClass: 전송률 등급 (500 m 초과 시 UNREACHABLE)
    """
    if d < 0:
        raise ChannelError(f"거리는 음수일 수 없습니다: {d}")
    for limit, rate in RATE_TABLE:
        if d <= limit:
            return rate
    return RateClass.UNREACHABLE


def airtime_us(size_bytes: int, rate: RateClass) -> int:
    """
    프레임 전송 시간 ceil(8 · size / rate) µs

    Raises:
        ChannelError: 도달 불가 전송률 또는 0 이하 크기
    """
    if not rate.reachable:
        raise ChannelError("도달 불가 전송률로는 전송 시간을 계산할 수 없습니다")
    if size_bytes <= 0:
        raise ChannelError(f"프레임 크기는 양수여야 합니다: {size_bytes}")
    # 80 · size / (0.1 Mbps 단위) 의 올림
    return -(-80 * size_bytes // rate.value)
