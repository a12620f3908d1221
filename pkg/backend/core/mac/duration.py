"""
duration 필드 계산

duration = 현재 프레임이 끝난 뒤 남은 예약 시간. RTS → CTS → DATA(→ 릴레이 DATA) → ACK
순서로 각 응답 프레임이 남은 예약을 이어받는다.
"""

from enum import Enum
from typing import Optional, Tuple

from core.channel.rates import RateClass, airtime_us
from core.exceptions import ChannelError, DurationOverflowError
from core.mac.frames import Frame
from core.mac.timing import DATA_HEADER_BYTES, MAX_DURATION_US, SIFS_US, T_ACK_US, T_CTS_US


class ResponseRole(str, Enum):
    """duration을 계산할 프레임의 역할"""
    CTS = "cts"                  # RTS에 대한 CTS
    DIRECT_DATA = "direct_data"  # AP로 가는 DATA (직접 전송 또는 릴레이 전달)
    RELAY_DATA = "relay_data"    # 소스가 릴레이로 보내는 DATA
    ACK = "ack"


def data_airtime_us(payload_bytes: int, rate: RateClass) -> int:
    """DATA 프레임 전송 시간 (페이로드 0은 DATA 없음으로 간주)"""
    if payload_bytes == 0:
        return 0
    return airtime_us(DATA_HEADER_BYTES + payload_bytes, rate)


def compute_duration(
    payload_bytes: int,
    direct_rate: Optional[RateClass],
    relay_rates: Optional[Tuple[RateClass, RateClass]] = None
) -> int:
    """
    RTS에 실을 예약 시간 계산

    Args:
        payload_bytes: 페이로드 크기
        direct_rate: 소스 → AP 전송률 (릴레이 경로만 계산할 때는 None 허용)
        relay_rates: (소스 → 릴레이, 릴레이 → AP) 전송률

    Returns:
        int: RTS 종료 이후 남은 예약 시간 (µs)

    Raises:
        DurationOverflowError: 결과가 32767 µs를 넘는 경우
    """
    if relay_rates is not None:
        r1, r2 = relay_rates
        if not (r1.reachable and r2.reachable):
            raise ChannelError("릴레이 경로에 도달 불가 구간이 있습니다")
        if direct_rate is not None and not (r1 > direct_rate and r2 > direct_rate):
            raise ValueError("릴레이 구간 전송률은 직접 전송률보다 빨라야 합니다")
        duration = (
            4 * SIFS_US + T_CTS_US
            + data_airtime_us(payload_bytes, r1)
            + data_airtime_us(payload_bytes, r2)
            + T_ACK_US
        )
    else:
        if direct_rate is None or not direct_rate.reachable:
            raise ChannelError("직접 전송률이 필요합니다")
        duration = 3 * SIFS_US + T_CTS_US + data_airtime_us(payload_bytes, direct_rate) + T_ACK_US

    if duration > MAX_DURATION_US:
        raise DurationOverflowError(duration, MAX_DURATION_US)
    return duration


def derive_response_duration(
    incoming: Frame,
    role: ResponseRole,
    payload_bytes: int = 0,
    relay_rate: Optional[RateClass] = None
) -> int:
    """
    응답 프레임의 duration 계산

    Args:
        incoming: 응답을 유발한 수신 프레임 (CTS의 경우 RTS)
        role: 계산할 프레임의 역할
        payload_bytes: RELAY_DATA의 페이로드 크기
        relay_rate: RELAY_DATA의 릴레이 → AP 전송률

    Returns:
        int: duration (µs, 0 미만이면 0)
    """
    if role is ResponseRole.CTS:
        return max(0, incoming.duration_us - SIFS_US - T_CTS_US)
    if role is ResponseRole.DIRECT_DATA:
        return SIFS_US + T_ACK_US
    if role is ResponseRole.RELAY_DATA:
        if relay_rate is None:
            raise ValueError("RELAY_DATA에는 릴레이 → AP 전송률이 필요합니다")
        return 2 * SIFS_US + data_airtime_us(payload_bytes, relay_rate) + T_ACK_US
    return 0
