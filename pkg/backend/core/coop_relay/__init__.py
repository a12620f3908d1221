"""
협력 릴레이 모듈

HF/IF/SF 지표, 후보 테이블, 릴레이 선택, 2홉 교환 계획
"""

from .factors import history_factor, interference_factor, selection_factor
from .candidates import (
    Candidate,
    CandidateTable,
    RelayStats,
    is_admissible,
    record_outcome,
    select_relay,
)
from .exchange import ExchangePlan, PlannedFrame, cooperative_exchange

__all__ = [
    'history_factor',
    'interference_factor',
    'selection_factor',
    'Candidate',
    'CandidateTable',
    'RelayStats',
    'is_admissible',
    'record_outcome',
    'select_relay',
    'ExchangePlan',
    'PlannedFrame',
    'cooperative_exchange',
]
