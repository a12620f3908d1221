"""
블랙리스트

노드마다 한 개씩 보유하며, AP의 브로드캐스트로만 복제된다. 항목은 실행 중 삭제되지 않는다.
"""

from typing import Dict, FrozenSet, Iterator, Optional


class Blacklist:
    """플래그된 MAC 주소 집합 (추가만 가능)"""

    def __init__(self):
        self._entries: Dict[int, int] = {}

    def add(self, mac: int, flagged_at: int) -> bool:
        """
        항목 추가

        Returns:
            bool: 새로 추가되었으면 True, 이미 있으면 False
        """
        if mac in self._entries:
            return False
        self._entries[mac] = flagged_at
        return True

    def flagged_at(self, mac: int) -> Optional[int]:
        return self._entries.get(mac)

    def snapshot(self) -> FrozenSet[int]:
        return frozenset(self._entries)

    def __contains__(self, mac: object) -> bool:
        return mac in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)
