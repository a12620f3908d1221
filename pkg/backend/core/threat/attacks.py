"""
공격 프레임 생성

- duration 부풀리기: AP로 보내는 RTS에 최대 예약 시간을 담는다. 반송파 감지와 백오프는
  지키므로 RTS는 정상적으로 복호되지만, CTS를 받아도 DATA를 보내지 않는다.
- RTS 범람: 정상처럼 보이는 duration의 RTS를 주기마다 보낸다. NAV와 백오프를 무시한다.
"""

from typing import Tuple

from core.exceptions import AttackError
from core.mac.frames import Frame, FrameKind
from core.mac.timing import T_RTS_US
from models.scenario_models import AttackerConfig, AttackMode


def next_attack_frame(
    cfg: AttackerConfig,
    now: int,
    ap_id: int,
    legit_duration_us: int
) -> Tuple[Frame, int]:
    """
    다음 공격 RTS와 다음 발사 시각

    Args:
        cfg: 공격 노드 설정 (node_id 배정 완료)
        now: 현재 시각 (µs)
        ap_id: AP MAC
        legit_duration_us: 범람 RTS에 실을 정상 예약 시간

    Returns:
        Tuple[Frame, int]: (RTS 프레임, 다음 발사 시각)

    Raises:
        AttackError: 시작 시각 이전이거나 node_id가 없는 경우
    """
    if cfg.node_id is None:
        raise AttackError("node_id가 배정되지 않은 공격 설정입니다")
    if now < cfg.start_at_us:
        raise AttackError(f"공격 시작 전입니다: now={now}, start_at={cfg.start_at_us}")

    if cfg.mode is AttackMode.INFLATE:
        frame = Frame(kind=FrameKind.RTS, src=cfg.node_id, dst=ap_id, duration_us=cfg.claimed_us)
        # 부풀린 예약이 끝난 뒤 다시 경쟁
        return frame, now + T_RTS_US + cfg.claimed_us

    frame = Frame(kind=FrameKind.RTS, src=cfg.node_id, dst=ap_id, duration_us=legit_duration_us)
    return frame, now + cfg.period_us
