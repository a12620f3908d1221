"""
방어 모듈

AP 재검증, 악성 판정, 블랙리스트 복제
"""

from .blacklist import Blacklist
from .revalidation import (
    TOLERANCE_PERCENT,
    Verdict,
    VerdictKind,
    apply_blacklist,
    legit_duration_ceiling,
    on_malicious,
    validate_rts,
    validation_threshold,
)

__all__ = [
    'Blacklist',
    'TOLERANCE_PERCENT',
    'Verdict',
    'VerdictKind',
    'apply_blacklist',
    'legit_duration_ceiling',
    'on_malicious',
    'validate_rts',
    'validation_threshold',
]
