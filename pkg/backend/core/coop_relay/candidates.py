"""
릴레이 후보 테이블과 선택

후보 테이블은 정적 토폴로지로부터 한 번 구성한다. 후보 조건:
- 소스 → 후보, 후보 → AP 두 구간 모두 도달 가능하고 직접 전송률보다 빠름
- 협력 교환 예약 시간이 직접 교환보다 짧음 (매체를 더 일찍 해제)
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Container, Dict, Iterable, List, Optional, Tuple

from core.channel.medium import Medium
from core.channel.rates import RateClass
from core.coop_relay.factors import history_factor, interference_factor, selection_factor
from core.exceptions import AccountingError
from core.mac.dcf import Outcome
from core.mac.duration import compute_duration

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class RelayStats:
    """(소스, 후보) 쌍의 이력/간섭 카운터"""
    successes: int = 0
    attempts: int = 0
    neighbors: int = 0
    concurrent_tx: int = 0

    @property
    def history_factor(self) -> float:
        return history_factor(self.successes, self.attempts)


@dataclass(slots=True)
class Candidate:
    """후보 릴레이"""
    node_id: int
    rate_to_relay: RateClass
    rate_to_ap: RateClass
    stats: RelayStats = field(default_factory=RelayStats)

    def selection_factor(self, max_neighbors: int) -> float:
        if_ = interference_factor(self.stats.neighbors, max_neighbors, self.stats.concurrent_tx)
        return selection_factor(self.stats.history_factor, if_)


def is_admissible(
    direct_rate: RateClass,
    rate_to_relay: RateClass,
    rate_to_ap: RateClass,
    payload_bytes: int
) -> bool:
    """두 구간이 모두 더 빠르고 협력 예약이 직접 예약보다 짧은지"""
    if not (rate_to_relay.reachable and rate_to_ap.reachable and direct_rate.reachable):
        return False
    if not (rate_to_relay > direct_rate and rate_to_ap > direct_rate):
        return False
    cooperative = compute_duration(payload_bytes, direct_rate, (rate_to_relay, rate_to_ap))
    return cooperative < compute_duration(payload_bytes, direct_rate)


class CandidateTable:
    """소스별 후보 릴레이 목록"""

    def __init__(
        self,
        entries: Dict[int, List[Candidate]],
        direct_rates: Dict[int, RateClass],
        max_neighbors: int
    ):
        self._entries = entries
        self.direct_rates = direct_rates
        self.max_neighbors = max_neighbors

    @classmethod
    def build(
        cls,
        medium: Medium,
        ap_id: int,
        station_ids: Iterable[int],
        payload_bytes: int
    ) -> "CandidateTable":
        """
        정적 토폴로지로부터 후보 테이블 구성 (전지적 이웃 탐색)

        Args:
            medium: 이웃/전송률 정보를 가진 매체
            ap_id: AP 노드 ID
            station_ids: 스테이션 ID 목록 (공격 노드 포함)
            payload_bytes: 공칭 페이로드 크기
        """
        stations = sorted(station_ids)
        max_neighbors = len(stations)  # 전체 노드 수(AP 포함) - 1
        entries: Dict[int, List[Candidate]] = {}
        direct_rates: Dict[int, RateClass] = {}

        for source in stations:
            direct = medium.rate(source, ap_id)
            direct_rates[source] = direct
            candidates = []
            for relay in stations:
                if relay == source:
                    continue
                r1 = medium.rate(source, relay)
                r2 = medium.rate(relay, ap_id)
                if is_admissible(direct, r1, r2, payload_bytes):
                    stats = RelayStats(neighbors=len(medium.neighbors(relay)))
                    candidates.append(Candidate(relay, r1, r2, stats))
            entries[source] = candidates

        table = cls(entries, direct_rates, max_neighbors)
        logger.debug(
            f"후보 테이블 구성 완료: 소스 {len(stations)}개, "
            f"후보 보유 소스 {sum(1 for c in entries.values() if c)}개"
        )
        return table

    def candidates(self, source: int) -> List[Candidate]:
        return self._entries.get(source, [])

    def candidate(self, source: int, relay: int) -> Optional[Candidate]:
        for cand in self.candidates(source):
            if cand.node_id == relay:
                return cand
        return None

    def stats(self, source: int, relay: int) -> RelayStats:
        cand = self.candidate(source, relay)
        if cand is None:
            raise KeyError(f"소스 {source}의 후보에 {relay}가 없습니다")
        return cand.stats


def select_relay(
    source: int,
    table: CandidateTable,
    blacklist: Container[int],
    concurrent_tx: Optional[Callable[[int], int]] = None
) -> Optional[int]:
    """
    SF 최대 후보 선택

    블랙리스트 필터링을 먼저 적용한 뒤 SF로 순위를 매긴다. 동률은 낮은 노드 ID.

    Args:
        source: 소스 노드
        table: 후보 테이블
        blacklist: 소스의 블랙리스트
        concurrent_tx: 후보에서 현재 들리는 전송 수를 돌려주는 함수 (선택 시점 샘플링)

    Returns:
        Optional[int]: 선택된 릴레이 ID, 후보가 없으면 None (직접 전송)
    """
    best: Optional[Tuple[Candidate, float]] = None
    for cand in table.candidates(source):
        if cand.node_id in blacklist:
            continue
        if concurrent_tx is not None:
            cand.stats.concurrent_tx = concurrent_tx(cand.node_id)
        sf = cand.selection_factor(table.max_neighbors)
        if best is None or sf > best[1] or (sf == best[1] and cand.node_id < best[0].node_id):
            best = (cand, sf)
    return best[0].node_id if best is not None else None


def record_outcome(table: CandidateTable, source: int, relay: int, outcome: Outcome) -> RelayStats:
    """
    협력 교환 결과 반영

    attempts는 항상 1 증가, successes는 AP의 ACK가 소스에 도달했을 때만 증가
    """
    stats = table.stats(source, relay)
    stats.attempts += 1
    if outcome is Outcome.SUCCESS:
        stats.successes += 1
    if stats.successes > stats.attempts:
        raise AccountingError(f"이력 카운터 불일치: 소스 {source}, 릴레이 {relay}")
    return stats
