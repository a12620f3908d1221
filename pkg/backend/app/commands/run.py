"""
run 명령

시나리오 파일 하나를 여러 시드로 실행하고 실행별 CSV와 요약 CSV를 기록한다.
"""

import logging
from pathlib import Path
from typing import Optional

import click

from app.commands import handle_cli_errors
from app.commands.report import render_summaries
from app.config import get_settings
from app.dependencies import apply_settings_defaults, get_experiment_service, get_results_storage
from services.experiment_service import derive_seeds
from utils.config_parser import parse_config

logger = logging.getLogger(__name__)


@click.command("run")
@click.option("--config", "config_path", required=True, type=click.Path(path_type=Path),
              help="시나리오 파일 (key = value)")
@click.option("--seeds", type=click.IntRange(min=1), default=None,
              help="시드 수 (기본: 시나리오의 repetitions)")
@click.option("--out", "out_path", type=click.Path(path_type=Path), default=None,
              help="실행별 CSV 경로 (기본: results/results.csv)")
@click.option("--paper-scale", "paper_scale", is_flag=True, help="전체 규모 (500초, 50회)")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="병렬 프로세스 수")
@handle_cli_errors
def run_command(
    config_path: Path,
    seeds: Optional[int],
    out_path: Optional[Path],
    paper_scale: bool,
    workers: Optional[int]
) -> None:
    """시나리오 실행"""
    settings = get_settings(paper_scale)
    config = apply_settings_defaults(parse_config(config_path), settings)
    seed_list = derive_seeds(config.seed, seeds or config.repetitions)

    logger.info(
        f"run 시작: {config.scenario_id} - 노드 {config.n_nodes}, 공격 {config.n_attackers}, "
        f"{config.sim_duration_s}초 × 시드 {len(seed_list)}개"
    )
    service = get_experiment_service(settings, workers)
    result = service.run(config, seed_list)

    storage = get_results_storage(settings)
    written = storage.save_runs(result.runs, result.summaries, out_path)
    render_summaries(result.summaries)
    click.echo(f"결과 저장: {written}")
