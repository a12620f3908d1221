"""
실행 이벤트 로그

송신, NAV 갱신, 릴레이 선택, 블랙리스트 적용 등 프로토콜 수준 사건을 순서대로 기록.
항상 SHA-256 다이제스트를 누적하고, 요청 시 전체 항목을 보관한다.
"""

import hashlib
from dataclasses import dataclass
from typing import Any, Iterator, List, Tuple

# 다이제스트에 합치기 전 모아 두는 항목 수 (결과 다이제스트와 무관)
FLUSH_EVERY = 512


@dataclass(frozen=True, slots=True)
class LogEntry:
    """이벤트 로그 항목"""
    at: int
    node: int
    kind: str
    fields: Tuple[Any, ...]


class EventLog:
    """순서 보존 이벤트 로그"""

    def __init__(self, keep_entries: bool = False):
        self.keep_entries = keep_entries
        self._entries: List[LogEntry] = []
        self._hash = hashlib.sha256()
        self._pending: List[str] = []
        self.count = 0

    def record(self, at: int, node: int, kind: str, *fields: Any) -> None:
        """항목 기록"""
        self.count += 1
        self._pending.append(f"{at}|{node}|{kind}|{fields!r}\n")
        if len(self._pending) >= FLUSH_EVERY:
            self._flush()
        if self.keep_entries:
            self._entries.append(LogEntry(at, node, kind, fields))

    @property
    def digest(self) -> str:
        """지금까지 기록된 로그의 다이제스트"""
        self._flush()
        return self._hash.hexdigest()

    def _flush(self) -> None:
        if self._pending:
            self._hash.update("".join(self._pending).encode("utf-8"))
            self._pending.clear()

    @property
    def entries(self) -> List[LogEntry]:
        return self._entries

    def of_kind(self, kind: str) -> Iterator[LogEntry]:
        return (entry for entry in self._entries if entry.kind == kind)
