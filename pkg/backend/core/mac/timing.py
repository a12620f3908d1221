"""
MAC 타이밍 상수 (802.11b DSSS 기준값, µs)
"""

from core.channel.rates import BASE_RATE, airtime_us

SIFS_US = 10
DIFS_US = 50
SLOT_US = 20

CW_MIN = 31
CW_MAX = 1023
RETRY_LIMIT = 7
CONTENTION_WINDOWS = (31, 63, 127, 255, 511, 1023)

# duration 필드 2바이트 중 사용 가능한 15비트의 최대값
MAX_DURATION_US = 32767

# 프레임 크기 (바이트)
RTS_BYTES = 20
CTS_BYTES = 14
ACK_BYTES = 14
DATA_HEADER_BYTES = 28
BLACKLIST_BYTES = 22

T_RTS_US = airtime_us(RTS_BYTES, BASE_RATE)
T_CTS_US = airtime_us(CTS_BYTES, BASE_RATE)
T_ACK_US = airtime_us(ACK_BYTES, BASE_RATE)
T_BLACKLIST_US = airtime_us(BLACKLIST_BYTES, BASE_RATE)

# 응답 대기 여유: 응답 전송 시간 + SIFS + 2 슬롯
RESPONSE_MARGIN_US = 2 * SLOT_US
CTS_TIMEOUT_US = SIFS_US + T_CTS_US + RESPONSE_MARGIN_US
