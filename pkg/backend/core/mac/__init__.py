"""
MAC(DCF) 모듈

프레임, 타이밍 상수, duration 계산, NAV, DCF 상태 기계
"""

from .frames import BROADCAST, Frame, FrameKind
from .duration import ResponseRole, compute_duration, data_airtime_us, derive_response_duration
from .nav import NavTimer, update_nav
from .dcf import (
    ActionKind,
    DcfPhase,
    DcfState,
    MacAction,
    Outcome,
    PendingPayload,
    Stimulus,
    StimulusKind,
    dcf_transition,
    escalate_cw,
)

__all__ = [
    'BROADCAST',
    'Frame',
    'FrameKind',
    'ResponseRole',
    'compute_duration',
    'data_airtime_us',
    'derive_response_duration',
    'NavTimer',
    'update_nav',
    'ActionKind',
    'DcfPhase',
    'DcfState',
    'MacAction',
    'Outcome',
    'PendingPayload',
    'Stimulus',
    'StimulusKind',
    'dcf_transition',
    'escalate_cw',
]
