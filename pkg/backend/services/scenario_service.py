"""
시나리오 실행 서비스

토폴로지 생성, 셀 구성, 커널 실행, 지표 수집을 담당.
run_scenario는 (설정, 시드)의 순수 함수로 같은 입력에 대해 항상 같은 결과를 낸다.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from core.cell.cell import AP_ID, Cell
from core.channel.geometry import PLAYGROUND_SIZE_M, Position
from core.exceptions import ConfigError
from core.sim_engine.event_log import EventLog
from core.sim_engine.kernel import SimKernel
from models.metrics_models import RunMetrics
from models.scenario_models import ScenarioConfig
from utils.logging_config import get_logger, log_performance
from utils.logging_constants import LogFormat, format_log_message

# AP는 플레이그라운드 중앙에 고정
AP_POSITION = Position(PLAYGROUND_SIZE_M / 2, PLAYGROUND_SIZE_M / 2)


@dataclass
class ScenarioRun:
    """한 번의 실행 결과 (지표 + 이벤트 로그 + 셀)"""
    metrics: RunMetrics
    event_log: EventLog
    cell: Cell


def generate_topology(config: ScenarioConfig, stream: np.random.Generator) -> Dict[int, Position]:
    """
    노드 배치 생성

    AP(0)는 (250, 250), 스테이션 1..n_nodes는 플레이그라운드 전체에 균등 분포.
    중앙 AP까지 최대 거리는 약 354 m로 모든 스테이션이 AP 범위 안에 있다.

    Args:
        config: 시나리오 설정
        stream: 토폴로지 난수 스트림

    Returns:
        Dict[int, Position]: 노드 ID → 위치
    """
    coords = stream.uniform(0.0, PLAYGROUND_SIZE_M, size=(config.n_nodes, 2))
    positions = {AP_ID: AP_POSITION}
    for index, (x, y) in enumerate(coords, start=1):
        positions[index] = Position(float(x), float(y))
    return positions


def _explicit_positions(
    config: ScenarioConfig,
    positions: Sequence[Tuple[float, float]]
) -> Dict[int, Position]:
    if len(positions) != config.n_nodes:
        raise ConfigError(
            "positions",
            f"스테이션 위치 {len(positions)}개가 n_nodes({config.n_nodes})와 다릅니다"
        )
    placed = {AP_ID: AP_POSITION}
    for index, (x, y) in enumerate(positions, start=1):
        placed[index] = Position(float(x), float(y))
    return placed


def simulate(
    config: ScenarioConfig,
    seed: int,
    positions: Optional[Sequence[Tuple[float, float]]] = None
) -> ScenarioRun:
    """
    시나리오 1회 실행 (이벤트 로그 포함)

    Args:
        config: 검증된 시나리오 설정
        seed: 실행 시드
        positions: 스테이션 1..n_nodes의 고정 위치 (없으면 토폴로지 스트림으로 생성)

    Returns:
        ScenarioRun: 지표, 이벤트 로그, 셀
    """
    run_logger = get_logger(__name__, scenario_id=config.scenario_id, seed=seed)
    run_logger.debug(format_log_message(
        LogFormat.RUN_START,
        scenario_id=config.scenario_id,
        n_nodes=config.n_nodes,
        n_attackers=config.n_attackers,
        defense="on" if config.defense_enabled else "off",
        seed=seed
    ))

    kernel = SimKernel(seed)
    if positions is None:
        placed = generate_topology(config, kernel.streams.generator("topology"))
    else:
        placed = _explicit_positions(config, positions)

    event_log = EventLog(keep_entries=config.record_trace)
    cell = Cell(config, kernel, placed, event_log)
    cell.run(config.sim_duration_us)

    metrics = collect_metrics(config, seed, cell)
    run_logger.info(format_log_message(
        LogFormat.RUN_END,
        scenario_id=config.scenario_id,
        seed=seed,
        throughput_bps=metrics.throughput_bps,
        detections=metrics.detections
    ))
    return ScenarioRun(metrics=metrics, event_log=event_log, cell=cell)


@log_performance()
def run_scenario(
    config: ScenarioConfig,
    seed: int,
    positions: Optional[Sequence[Tuple[float, float]]] = None
) -> RunMetrics:
    """시나리오 1회 실행 후 지표 반환"""
    return simulate(config, seed, positions).metrics


def collect_metrics(config: ScenarioConfig, seed: int, cell: Cell) -> RunMetrics:
    """셀 카운터를 RunMetrics로 변환"""
    counters = cell.counters
    return RunMetrics(
        scenario_id=config.scenario_id,
        n_nodes=config.n_nodes,
        n_attackers=config.n_attackers,
        attack_mode=config.attack_mode,
        defense_enabled=config.defense_enabled,
        seed=seed,
        sim_duration_us=config.sim_duration_us,
        payload_bytes=config.payload_bytes,
        delivered_exchanges=counters.delivered_exchanges,
        delivered_payload_bits=8 * config.payload_bytes * counters.delivered_exchanges,
        per_node_delivered_bits=dict(sorted(counters.per_node_delivered_bits.items())),
        detections=counters.detections,
        false_positives=counters.false_positives,
        rts_sent=counters.rts_sent,
        collisions=cell.medium.collisions,
        relayed_exchanges=counters.relayed_exchanges,
        relay_failures=counters.relay_failures,
        dropped=counters.dropped,
        broadcast_airtime_us=counters.broadcast_airtime_us,
        first_forged_decode_us=counters.first_forged_decode_us,
        first_detection_us=counters.first_detection_us,
        events_processed=cell.kernel.processed,
        trace_digest=cell.event_log.digest
    )
