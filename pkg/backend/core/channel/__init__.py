"""
채널 모듈

정적 기하, 거리 기반 전송률 적응, 전송 시간, 충돌 모델
"""

from .geometry import Position, distance, in_range, PLAYGROUND_SIZE_M, COMM_RANGE_M
from .rates import RateClass, RATE_TABLE, BASE_RATE, REACHABLE_RATES, rate_for_distance, airtime_us
from .medium import Medium, MediumListener, Transmission

__all__ = [
    'Position',
    'distance',
    'in_range',
    'PLAYGROUND_SIZE_M',
    'COMM_RANGE_M',
    'RateClass',
    'RATE_TABLE',
    'BASE_RATE',
    'REACHABLE_RATES',
    'rate_for_distance',
    'airtime_us',
    'Medium',
    'MediumListener',
    'Transmission',
]
