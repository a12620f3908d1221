"""
협력(2홉) 교환 계획

RTS/CTS는 소스 ↔ AP 사이에서 이루어지고, 예약은 전체 체인을 덮는다:
CTS(AP→소스) → DATA(소스→릴레이) → DATA(릴레이→AP) → ACK(AP→소스)
릴레이가 없으면 일반 직접 교환 계획을 만든다.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from core.channel.rates import BASE_RATE, RateClass
from core.mac.duration import compute_duration, data_airtime_us
from core.mac.frames import FrameKind
from core.mac.timing import SIFS_US, T_ACK_US, T_CTS_US


@dataclass(frozen=True, slots=True)
class PlannedFrame:
    """RTS 종료 시점을 0으로 한 프레임 일정"""
    kind: FrameKind
    src: int
    dst: int
    start_us: int
    airtime_us: int
    rate: RateClass

    @property
    def end_us(self) -> int:
        return self.start_us + self.airtime_us


@dataclass(frozen=True)
class ExchangePlan:
    """한 번의 예약으로 수행되는 교환 일정"""
    source: int
    relay: Optional[int]
    ap: int
    payload_bytes: int
    reservation_us: int
    frames: Tuple[PlannedFrame, ...]

    @property
    def medium_occupancy_us(self) -> int:
        """RTS 종료 후 매체 점유 시간"""
        return self.frames[-1].end_us

    @property
    def ack_wait_us(self) -> int:
        """소스 DATA 종료부터 ACK 종료까지"""
        source_data = next(f for f in self.frames if f.kind is FrameKind.DATA and f.src == self.source)
        return self.frames[-1].end_us - source_data.end_us


def cooperative_exchange(
    source: int,
    relay: Optional[int],
    ap: int,
    payload_bytes: int,
    direct_rate: RateClass,
    relay_rates: Optional[Tuple[RateClass, RateClass]] = None
) -> ExchangePlan:
    """
    교환 프레임 일정 생성

    Args:
        source: 소스 노드
        relay: 릴레이 노드 (None이면 직접 교환)
        ap: AP 노드
        payload_bytes: 페이로드 크기
        direct_rate: 소스 → AP 전송률
        relay_rates: (소스 → 릴레이, 릴레이 → AP) 전송률

    Returns:
        ExchangePlan: 프레임 일정과 예약 시간
    """
    frames = []
    t = SIFS_US
    frames.append(PlannedFrame(FrameKind.CTS, ap, source, t, T_CTS_US, BASE_RATE))
    t += T_CTS_US + SIFS_US

    if relay is None:
        airtime = data_airtime_us(payload_bytes, direct_rate)
        frames.append(PlannedFrame(FrameKind.DATA, source, ap, t, airtime, direct_rate))
        t += airtime + SIFS_US
        reservation = compute_duration(payload_bytes, direct_rate)
    else:
        if relay_rates is None:
            raise ValueError("릴레이 교환에는 구간 전송률이 필요합니다")
        r1, r2 = relay_rates
        first = data_airtime_us(payload_bytes, r1)
        frames.append(PlannedFrame(FrameKind.DATA, source, relay, t, first, r1))
        t += first + SIFS_US
        second = data_airtime_us(payload_bytes, r2)
        frames.append(PlannedFrame(FrameKind.DATA, relay, ap, t, second, r2))
        t += second + SIFS_US
        reservation = compute_duration(payload_bytes, direct_rate, relay_rates)

    frames.append(PlannedFrame(FrameKind.ACK, ap, source, t, T_ACK_US, BASE_RATE))
    return ExchangePlan(
        source=source,
        relay=relay,
        ap=ap,
        payload_bytes=payload_bytes,
        reservation_us=reservation,
        frames=tuple(frames)
    )
