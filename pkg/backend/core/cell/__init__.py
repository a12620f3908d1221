"""
셀 모듈

노드 동작(AP, 스테이션, 공격 노드)과 셀 구성
"""

from .node import Node, ContendingNode
from .station import Station, NO_RELAY
from .access_point import AccessPoint
from .attackers import FloodAttacker, InflationAttacker
from .counters import CellCounters
from .cell import AP_ID, Cell

__all__ = [
    'Node',
    'ContendingNode',
    'Station',
    'NO_RELAY',
    'AccessPoint',
    'FloodAttacker',
    'InflationAttacker',
    'CellCounters',
    'AP_ID',
    'Cell',
]
