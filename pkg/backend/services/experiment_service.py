"""
실험 서비스

시드별 반복 실행, 설정 지점별 집계(평균, 95% 신뢰구간), 노드 수 스윕과 방어 이득 계산.
병렬화는 시드 단위로만 하며 한 실행 내부는 항상 단일 스레드다.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from core.exceptions import ConfigError
from models.metrics_models import ConfigPointSummary, RunMetrics
from models.scenario_models import AttackerConfig, ScenarioConfig
from services.scenario_service import run_scenario
from utils.logging_constants import LogFormat, format_log_message
from utils.stats import aggregate_ci95, gain_ratio

logger = logging.getLogger(__name__)


@dataclass
class ExperimentResult:
    """실험 결과 (실행별 지표, 설정 지점 요약, 노드 수별 이득)"""
    runs: List[RunMetrics] = field(default_factory=list)
    summaries: List[ConfigPointSummary] = field(default_factory=list)
    gains: Optional[pd.DataFrame] = None


def derive_seeds(base_seed: int, count: int) -> List[int]:
    """기준 시드에서 연속된 실행 시드 목록"""
    if count < 1:
        raise ConfigError("repetitions", f"반복 횟수는 1 이상이어야 합니다: {count}")
    return [base_seed + i for i in range(count)]


def _run_one(job: Tuple[ScenarioConfig, int]) -> RunMetrics:
    config, seed = job
    return run_scenario(config, seed)


def summarize(runs: Iterable[RunMetrics]) -> List[ConfigPointSummary]:
    """설정 지점별 시드 집계 (처음 등장한 순서 유지)"""
    groups: Dict[Tuple, List[RunMetrics]] = {}
    for m in runs:
        key = (m.scenario_id, m.n_nodes, m.n_attackers, m.attack_mode, m.defense_enabled)
        groups.setdefault(key, []).append(m)

    summaries = []
    for (scenario_id, n_nodes, n_attackers, attack_mode, defense), members in groups.items():
        mean, half = aggregate_ci95([m.throughput_bps for m in members])
        summaries.append(ConfigPointSummary(
            scenario_id=scenario_id,
            n_nodes=n_nodes,
            n_attackers=n_attackers,
            attack_mode=attack_mode,
            defense=defense,
            runs=len(members),
            mean=mean,
            ci95_half=half,
            mean_detections=sum(m.detections for m in members) / len(members),
            mean_broadcast_airtime_us=sum(m.broadcast_airtime_us for m in members) / len(members)
        ))
    return summaries


def gain_table(summaries: Iterable[ConfigPointSummary]) -> pd.DataFrame:
    """노드 수별 방어 on/off 평균과 이득 비율"""
    by_point: Dict[Tuple[str, int], Dict[bool, float]] = {}
    for s in summaries:
        by_point.setdefault((s.scenario_id, s.n_nodes), {})[s.defense] = s.mean

    records = []
    for (scenario_id, n_nodes), means in by_point.items():
        if True not in means or False not in means:
            continue
        ratio = gain_ratio(means[True], means[False])
        records.append({
            "scenario_id": scenario_id,
            "n_nodes": n_nodes,
            "mean_on": means[True],
            "mean_off": means[False],
            "gain_ratio": ratio,
        })
        if ratio is not None:
            logger.info(format_log_message(LogFormat.GAIN, n_nodes=n_nodes, ratio=ratio))
    return pd.DataFrame.from_records(
        records, columns=["scenario_id", "n_nodes", "mean_on", "mean_off", "gain_ratio"]
    )


def sweep_config(
    template: ScenarioConfig,
    n_nodes: int,
    n_attackers: Optional[int],
    defense_enabled: bool
) -> ScenarioConfig:
    """
    스윕 지점 설정 생성

    공격 노드 수를 지정하면 템플릿의 첫 공격 설정(없으면 기본 부풀리기 공격)을
    복제하고 ID는 다시 배정한다.
    """
    if n_attackers is None:
        attackers = [a.model_copy(update={"node_id": None}) for a in template.attackers]
    else:
        base = template.attackers[0] if template.attackers else AttackerConfig()
        attackers = [base.model_copy(update={"node_id": None}) for _ in range(n_attackers)]

    data = template.model_dump(exclude={"attackers", "n_nodes", "defense_enabled"})
    data.update(
        n_nodes=n_nodes,
        defense_enabled=defense_enabled,
        attackers=[a.model_dump() for a in attackers]
    )
    try:
        return ScenarioConfig.model_validate(data)
    except ValueError as e:
        raise ConfigError("nodes", f"노드 {n_nodes}개 지점 설정 오류: {e}") from e


class ExperimentService:
    """실험 오케스트레이션"""

    def __init__(self, workers: int = 1):
        """
        실험 서비스 초기화

        Args:
            workers: 시드 병렬 실행 프로세스 수 (1이면 순차)
        """
        self.workers = max(1, workers)

    def run_seeds(self, config: ScenarioConfig, seeds: Sequence[int]) -> List[RunMetrics]:
        """설정 하나를 여러 시드로 실행 (결과는 시드 순서)"""
        jobs = [(config, seed) for seed in seeds]
        if self.workers == 1 or len(jobs) == 1:
            return [_run_one(job) for job in jobs]
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(_run_one, jobs))

    def run(self, config: ScenarioConfig, seeds: Sequence[int]) -> ExperimentResult:
        """단일 설정 실험"""
        runs = self.run_seeds(config, seeds)
        return ExperimentResult(runs=runs, summaries=summarize(runs))

    def sweep(
        self,
        template: ScenarioConfig,
        node_counts: Sequence[int],
        seeds: Sequence[int],
        n_attackers: Optional[int] = None,
        defense_modes: Sequence[bool] = (True, False)
    ) -> ExperimentResult:
        """
        노드 수 스윕

        Args:
            template: 기준 시나리오 설정
            node_counts: 노드 수 목록
            seeds: 지점마다 사용할 시드
            n_attackers: 공격 노드 수 (None이면 템플릿 그대로)
            defense_modes: 실행할 방어 설정들

        Returns:
            ExperimentResult: 실행별 지표, 요약, 노드 수별 이득
        """
        configs = [
            sweep_config(template, n, n_attackers, defense)
            for n in node_counts
            for defense in defense_modes
        ]

        jobs = [(config, seed) for config in configs for seed in seeds]
        if self.workers == 1:
            runs = [_run_one(job) for job in jobs]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                runs = list(pool.map(_run_one, jobs))

        summaries = summarize(runs)
        for s in summaries:
            logger.info(format_log_message(
                LogFormat.SWEEP_POINT,
                n_nodes=s.n_nodes,
                defense="on" if s.defense else "off",
                mean=s.mean
            ))
        return ExperimentResult(runs=runs, summaries=summaries, gains=gain_table(summaries))
