"""
MAC 프레임 정의

MAC 주소는 노드 ID(정수)로 표현하며, 브로드캐스트는 BROADCAST(-1)
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from core.exceptions import DurationOverflowError
from core.mac.timing import (
    ACK_BYTES, BLACKLIST_BYTES, CTS_BYTES, DATA_HEADER_BYTES, MAX_DURATION_US, RTS_BYTES
)

BROADCAST = -1


class FrameKind(str, Enum):
    """프레임 종류"""
    RTS = "RTS"
    CTS = "CTS"
    DATA = "DATA"
    ACK = "ACK"
    BLACKLIST = "BLACKLIST"


_CONTROL_SIZES = {
    FrameKind.RTS: RTS_BYTES,
    FrameKind.CTS: CTS_BYTES,
    FrameKind.ACK: ACK_BYTES,
    FrameKind.BLACKLIST: BLACKLIST_BYTES,
}


@dataclass(frozen=True, slots=True)
class Frame:
    """MAC 프로토콜 데이터 단위"""
    kind: FrameKind
    src: int
    dst: int
    duration_us: int
    payload_bytes: int = 0
    relay_flag: bool = False
    offender: Optional[int] = None
    # 원 송신자와 교환 ID (릴레이 전달 및 중복 배달 판별용)
    origin: Optional[int] = None
    exchange_id: Optional[int] = None

    def __post_init__(self):
        if not 0 <= self.duration_us <= MAX_DURATION_US:
            raise DurationOverflowError(self.duration_us, MAX_DURATION_US)
        if self.kind is not FrameKind.DATA and self.payload_bytes != 0:
            raise ValueError(f"{self.kind.value} 프레임은 페이로드를 가질 수 없습니다")
        if self.kind is FrameKind.BLACKLIST and self.offender is None:
            raise ValueError("BLACKLIST 프레임에는 offender가 필요합니다")

    @property
    def size_bytes(self) -> int:
        if self.kind is FrameKind.DATA:
            return DATA_HEADER_BYTES + self.payload_bytes
        return _CONTROL_SIZES[self.kind]

    @property
    def is_broadcast(self) -> bool:
        return self.dst == BROADCAST
