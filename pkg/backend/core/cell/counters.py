"""
셀 실행 카운터
"""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Optional


@dataclass
class CellCounters:
    """실행 중 누적되는 카운터 (실행 종료 후 RunMetrics로 변환)"""
    rts_sent: int = 0
    delivered_exchanges: int = 0
    per_node_delivered_bits: Dict[int, int] = field(default_factory=lambda: defaultdict(int))
    detections: int = 0
    false_positives: int = 0
    relayed_exchanges: int = 0
    relay_failures: int = 0
    dropped: int = 0
    broadcast_airtime_us: int = 0
    first_forged_decode_us: Optional[int] = None
    first_detection_us: Optional[int] = None
