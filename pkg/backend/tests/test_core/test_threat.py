"""
공격 프레임 생성 테스트
"""

import pytest

from core.exceptions import AttackError
from core.mac.frames import FrameKind
from core.threat import next_attack_frame
from models.scenario_models import AttackerConfig, AttackMode


def test_inflated_rts_claims_configured_duration():
    cfg = AttackerConfig(node_id=4, mode=AttackMode.INFLATE)
    frame, next_fire = next_attack_frame(cfg, now=1000, ap_id=0, legit_duration_us=1764)

    assert frame.kind is FrameKind.RTS
    assert (frame.src, frame.dst) == (4, 0)
    assert frame.duration_us == 32767
    assert next_fire == 1000 + 160 + 32767


def test_inflation_with_custom_claim():
    cfg = AttackerConfig(node_id=4, claimed_us=20000)
    frame, next_fire = next_attack_frame(cfg, now=0, ap_id=0, legit_duration_us=0)
    assert frame.duration_us == 20000
    assert next_fire == 20160


def test_flood_uses_legitimate_duration_and_period():
    cfg = AttackerConfig(node_id=2, mode=AttackMode.FLOOD, period_us=3000, start_at_us=500)
    frame, next_fire = next_attack_frame(cfg, now=500, ap_id=0, legit_duration_us=1764)
    assert frame.duration_us == 1764
    assert next_fire == 3500


def test_fire_before_start_rejected():
    cfg = AttackerConfig(node_id=2, start_at_us=10_000)
    with pytest.raises(AttackError):
        next_attack_frame(cfg, now=9_999, ap_id=0, legit_duration_us=1764)


def test_unassigned_node_rejected():
    with pytest.raises(AttackError):
        next_attack_frame(AttackerConfig(), now=0, ap_id=0, legit_duration_us=1764)
