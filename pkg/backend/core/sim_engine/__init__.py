"""
시뮬레이션 엔진 모듈

결정적 이산 사건 커널과 난수 스트림, 이벤트 로그
"""

from .kernel import Event, SimKernel
from .random_streams import RandomStreams, STREAM_NAMES
from .event_log import EventLog, LogEntry

__all__ = [
    'Event',
    'SimKernel',
    'RandomStreams',
    'STREAM_NAMES',
    'EventLog',
    'LogEntry',
]
