"""
결과 파일 저장소

실행별 행 CSV, 설정 지점별 요약 CSV, 노드 수별 방어 이득 CSV를 기록한다.
열 순서는 고정이며 줄바꿈은 LF.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

import pandas as pd

from core.exceptions import ResultsStorageError
from models.metrics_models import ConfigPointSummary, RunMetrics
from utils.logging_constants import LogFormat, format_log_message

logger = logging.getLogger(__name__)

RUN_COLUMNS = [
    "scenario_id",
    "n_nodes",
    "n_attackers",
    "attack_mode",
    "defense",
    "seed",
    "throughput_bps",
    "detections",
    "false_positives",
    "rts_sent",
    "collisions",
]

SUMMARY_COLUMNS = [
    "scenario_id",
    "n_nodes",
    "n_attackers",
    "attack_mode",
    "defense",
    "runs",
    "mean",
    "ci95_half",
    "mean_detections",
    "mean_broadcast_airtime_us",
]

GAIN_COLUMNS = ["scenario_id", "n_nodes", "mean_on", "mean_off", "gain_ratio"]

PathLike = Union[str, Path]


def _defense_label(enabled: bool) -> str:
    return "on" if enabled else "off"


def run_rows(runs: Iterable[RunMetrics]) -> pd.DataFrame:
    """실행 결과를 CSV 열 순서의 DataFrame으로 변환"""
    records = [
        {
            "scenario_id": m.scenario_id,
            "n_nodes": m.n_nodes,
            "n_attackers": m.n_attackers,
            "attack_mode": m.attack_mode,
            "defense": _defense_label(m.defense_enabled),
            "seed": m.seed,
            "throughput_bps": round(m.throughput_bps, 3),
            "detections": m.detections,
            "false_positives": m.false_positives,
            "rts_sent": m.rts_sent,
            "collisions": m.collisions,
        }
        for m in runs
    ]
    return pd.DataFrame.from_records(records, columns=RUN_COLUMNS)


def summary_rows(summaries: Iterable[ConfigPointSummary]) -> pd.DataFrame:
    records = []
    for s in summaries:
        record = s.model_dump(include=set(SUMMARY_COLUMNS))
        record["defense"] = _defense_label(s.defense)
        records.append(record)
    return pd.DataFrame.from_records(records, columns=SUMMARY_COLUMNS)


def _write(frame: pd.DataFrame, path: PathLike) -> Path:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(target, index=False, lineterminator="\n")
    except OSError as e:
        raise ResultsStorageError(str(target), str(e)) from e
    logger.info(format_log_message(LogFormat.CSV_WRITTEN, path=target, rows=len(frame)))
    return target


def emit_csv(rows: Iterable[RunMetrics], path: PathLike) -> Path:
    """
    실행별 결과 CSV 기록 (실행이 없으면 헤더만)

    Raises:
        ResultsStorageError: 경로에 쓸 수 없는 경우
    """
    return _write(run_rows(rows), path)


def emit_summary(summaries: Iterable[ConfigPointSummary], path: PathLike) -> Path:
    """설정 지점별 평균 / ci95 반폭 CSV 기록"""
    return _write(summary_rows(summaries), path)


class ResultsStorage:
    """결과 디렉토리 기반 저장소"""

    def __init__(self, results_dir: Path):
        """
        결과 저장소 초기화

        Args:
            results_dir: 결과 파일 기본 디렉토리
        """
        self.results_dir = Path(results_dir)

    def resolve(self, path: Optional[PathLike], default_name: str) -> Path:
        """출력 경로 결정 (없으면 결과 디렉토리 아래 기본 파일명)"""
        if path is None:
            return self.results_dir / default_name
        return Path(path)

    @staticmethod
    def summary_path(runs_path: Path) -> Path:
        """실행별 CSV 옆에 놓이는 요약 파일 경로"""
        return runs_path.with_name(f"{runs_path.stem}_summary{runs_path.suffix or '.csv'}")

    def save_runs(
        self,
        runs: List[RunMetrics],
        summaries: List[ConfigPointSummary],
        path: Optional[PathLike] = None
    ) -> Path:
        """실행별 CSV와 요약 CSV를 함께 기록"""
        runs_path = self.resolve(path, "results.csv")
        emit_csv(runs, runs_path)
        emit_summary(summaries, self.summary_path(runs_path))
        return runs_path

    def save_gains(self, gains: pd.DataFrame, out_dir: Optional[PathLike] = None) -> Path:
        """노드 수별 방어 이득 CSV 기록"""
        directory = Path(out_dir) if out_dir is not None else self.results_dir
        return _write(gains.reindex(columns=GAIN_COLUMNS), directory / "gain.csv")
