"""
NAV (가상 반송파 감지) 타이머
"""

from dataclasses import dataclass
from typing import Container, Optional

from core.mac.frames import Frame

_NO_BLACKLIST: frozenset = frozenset()


@dataclass(frozen=True, slots=True)
class NavTimer:
    """quiet_until 이전에는 전송을 시작하지 않는다"""
    quiet_until: int = 0
    set_by: Optional[int] = None

    def effective_until(self, blacklist: Container[int] = _NO_BLACKLIST) -> int:
        """블랙리스트된 노드가 설정한 NAV는 만료된 것으로 취급"""
        if self.set_by is not None and self.set_by in blacklist:
            return 0
        return self.quiet_until

    def is_quiet(self, now: int, blacklist: Container[int] = _NO_BLACKLIST) -> bool:
        return now < self.effective_until(blacklist)


def update_nav(
    state: NavTimer,
    overheard: Frame,
    frame_end: int,
    blacklist: Container[int] = _NO_BLACKLIST
) -> NavTimer:
    """
    엿들은 프레임으로 NAV 갱신

    Args:
        state: 현재 NAV
        overheard: 복호한 제3자 프레임
        frame_end: 프레임 종료 시각
        blacklist: 이 노드의 블랙리스트

    Returns:
        NavTimer: 갱신된 NAV (변화 없으면 state 그대로)
    """
    if overheard.src in blacklist:
        return state
    candidate = frame_end + overheard.duration_us
    if candidate > state.effective_until(blacklist):
        return NavTimer(quiet_until=candidate, set_by=overheard.src)
    return state
