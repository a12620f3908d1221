"""
재검증(Revalidation) 방어

AP가 수신한 RTS마다 정상 송신자가 요구할 수 있는 최대 예약 시간을 다시 계산하고,
허용 오차 5%를 넘는 요구를 악성으로 판정한다. 악성 송신자는 AP 블랙리스트에 추가되고
MAC 주소가 한 번 브로드캐스트된다.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from core.channel.rates import REACHABLE_RATES, RateClass
from core.defense.blacklist import Blacklist
from core.mac.duration import data_airtime_us
from core.mac.frames import BROADCAST, Frame, FrameKind
from core.mac.timing import SIFS_US, T_ACK_US, T_CTS_US

logger = logging.getLogger(__name__)

# 허용 오차 (백분율)
TOLERANCE_PERCENT = 5


class VerdictKind(str, Enum):
    LEGITIMATE = "legitimate"
    MALICIOUS = "malicious"


@dataclass(frozen=True, slots=True)
class Verdict:
    """RTS 판정 결과"""
    kind: VerdictKind
    claimed_us: int
    ceiling_us: int
    threshold_us: int

    @property
    def is_malicious(self) -> bool:
        return self.kind is VerdictKind.MALICIOUS


def _slowest_relay_rate(direct: RateClass) -> RateClass:
    """직접 전송률보다 빠른 전송률 중 가장 느린 것"""
    faster = [rate for rate in REACHABLE_RATES if rate > direct]
    return min(faster) if faster else direct


def legit_duration_ceiling(nominal_payload_bytes: int) -> int:
    """
    정상 송신자가 요구할 수 있는 최대 예약 시간

    (a) 가장 느린 전송률의 직접 교환과 (b) 릴레이 허용 최저 전송률(1 Mbps 직접일 때 2 Mbps)의
    두 구간 협력 교환 중 큰 값
    """
    slowest = min(REACHABLE_RATES)
    direct = 3 * SIFS_US + T_CTS_US + data_airtime_us(nominal_payload_bytes, slowest) + T_ACK_US
    hop = _slowest_relay_rate(slowest)
    cooperative = 4 * SIFS_US + T_CTS_US + 2 * data_airtime_us(nominal_payload_bytes, hop) + T_ACK_US
    return max(direct, cooperative)


def validation_threshold(ceiling_us: int) -> int:
    """ceil(ceiling · 1.05)"""
    return -(-ceiling_us * (100 + TOLERANCE_PERCENT) // 100)


def validate_rts(frame: Frame, ceiling_us: int) -> Verdict:
    """
    RTS duration 재검증

    과다 예약만 공격으로 본다 (과소 요구는 정상)
    """
    if frame.kind is not FrameKind.RTS:
        raise ValueError(f"RTS만 검증할 수 있습니다: {frame.kind.value}")
    threshold = validation_threshold(ceiling_us)
    kind = VerdictKind.MALICIOUS if frame.duration_us > threshold else VerdictKind.LEGITIMATE
    return Verdict(kind, frame.duration_us, ceiling_us, threshold)


def on_malicious(
    blacklist: Blacklist,
    offender: int,
    ap_id: int,
    rts_end: int
) -> Optional[Tuple[Frame, int]]:
    """
    악성 판정 후 AP 처리

    Args:
        blacklist: AP 블랙리스트
        offender: 악성 송신자 MAC
        ap_id: AP MAC
        rts_end: 판정한 RTS의 종료 시각

    Returns:
        Optional[Tuple[Frame, int]]: (BLACKLIST 브로드캐스트 프레임, 송신 시각),
            이미 블랙리스트된 송신자면 None (재방송 없음)
    """
    if not blacklist.add(offender, rts_end):
        return None
    frame = Frame(
        kind=FrameKind.BLACKLIST,
        src=ap_id,
        dst=BROADCAST,
        duration_us=0,
        offender=offender
    )
    logger.debug(f"악성 송신자 {offender} 블랙리스트 추가, 브로드캐스트 예약 {rts_end + SIFS_US} µs")
    return frame, rts_end + SIFS_US


def apply_blacklist(blacklist: Blacklist, bcast: Frame, now: int) -> bool:
    """
    수신한 BLACKLIST 브로드캐스트 반영

    Returns:
        bool: 새 항목이 추가되었는지
    """
    if bcast.kind is not FrameKind.BLACKLIST or bcast.offender is None:
        raise ValueError("BLACKLIST 프레임이 아닙니다")
    return blacklist.add(bcast.offender, now)

