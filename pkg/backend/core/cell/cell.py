"""
셀 구성

AP(노드 0), 정상 스테이션, 공격 노드를 한 매체에 연결하고 커널을 실행한다.
"""

import itertools
import logging
from typing import Dict, List, Optional

from core.channel.geometry import Position
from core.channel.medium import Medium
from core.coop_relay.candidates import CandidateTable
from core.defense.revalidation import legit_duration_ceiling
from core.sim_engine.event_log import EventLog
from core.sim_engine.kernel import SimKernel
from core.cell.access_point import AccessPoint
from core.cell.attackers import FloodAttacker, InflationAttacker
from core.cell.counters import CellCounters
from core.cell.node import Node
from core.cell.station import Station
from models.scenario_models import AttackMode, ScenarioConfig

logger = logging.getLogger(__name__)

AP_ID = 0


class Cell:
    """한 번의 실행에 쓰이는 WLAN 셀"""

    def __init__(
        self,
        config: ScenarioConfig,
        kernel: SimKernel,
        positions: Dict[int, Position],
        event_log: Optional[EventLog] = None
    ):
        """
        셀 구성

        Args:
            config: 검증된 시나리오 설정
            kernel: 시뮬레이션 커널 (토폴로지 생성에 쓴 것과 같은 커널)
            positions: AP(0)와 스테이션(1..n_nodes) 위치
            event_log: 이벤트 로그 (없으면 다이제스트만 누적하는 로그 생성)
        """
        self.config = config
        self.kernel = kernel
        self.ap_id = AP_ID
        self.event_log = event_log if event_log is not None else EventLog(config.record_trace)
        self.medium = Medium(kernel, positions, self.event_log)
        self.counters = CellCounters()
        self.exchange_ids = itertools.count(1)
        self.ceiling_us = legit_duration_ceiling(config.payload_bytes)

        station_ids = [node for node in sorted(positions) if node != AP_ID]
        self.attacker_ids = frozenset(config.attacker_ids)
        self.forging_ids = frozenset(
            a.node_id for a in config.attackers if a.mode is AttackMode.INFLATE
        )
        self.candidate_table = CandidateTable.build(
            self.medium, AP_ID, station_ids, config.payload_bytes
        )

        attacks = {a.node_id: a for a in config.attackers}
        self.ap = AccessPoint(AP_ID, self)
        self.nodes: List[Node] = [self.ap]
        for node_id in station_ids:
            attack = attacks.get(node_id)
            if attack is None:
                node = Station(node_id, self)
            elif attack.mode is AttackMode.INFLATE:
                node = InflationAttacker(node_id, self, attack)
            else:
                node = FloodAttacker(node_id, self, attack)
            self.nodes.append(node)

        for node in self.nodes:
            self.medium.attach(node)

        logger.debug(
            f"셀 구성 완료: 스테이션 {len(station_ids)}개 (공격 {len(self.attacker_ids)}개), "
            f"재검증 상한 {self.ceiling_us} µs"
        )

    def node(self, node_id: int) -> Node:
        return self.nodes[node_id]

    def run(self, duration_us: int) -> int:
        """모든 노드를 시작하고 duration_us까지 실행"""
        for node in self.nodes:
            node.start()
        return self.kernel.run_until(duration_us)
