"""
공통 테스트 픽스처
"""

from typing import Dict, Sequence, Tuple

import pytest

from core.cell.cell import AP_ID, Cell
from core.channel.geometry import Position
from core.sim_engine.event_log import EventLog
from core.sim_engine.kernel import SimKernel
from models.scenario_models import ScenarioConfig
from services.scenario_service import AP_POSITION


def place(stations: Sequence[Tuple[float, float]]) -> Dict[int, Position]:
    """AP(0)와 스테이션 1..n 위치 사전"""
    positions = {AP_ID: AP_POSITION}
    for node_id, (x, y) in enumerate(stations, start=1):
        positions[node_id] = Position(x, y)
    return positions


@pytest.fixture
def kernel() -> SimKernel:
    return SimKernel(seed=7)


@pytest.fixture
def build_cell():
    """고정 위치로 셀을 구성하는 팩토리 (항상 전체 이벤트 로그 보관)"""
    def _build(stations: Sequence[Tuple[float, float]], seed: int = 1, **overrides) -> Cell:
        values = {"scenario_id": "cell-test", "n_nodes": len(stations), "sim_duration_s": 1}
        values.update(overrides)
        config = ScenarioConfig(**values)
        return Cell(config, SimKernel(seed), place(stations), EventLog(keep_entries=True))
    return _build
