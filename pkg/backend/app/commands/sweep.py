"""
sweep 명령

노드 수 범위마다 방어 on/off를 실행하고, 실행별 CSV, 요약 CSV, 방어 이득 CSV를 기록한다.
"""

import logging
from pathlib import Path
from typing import Optional

import click

from app.commands import handle_cli_errors
from app.commands.report import render_summaries
from app.config import get_settings
from app.dependencies import apply_settings_defaults, get_experiment_service, get_results_storage
from models.scenario_models import ScenarioConfig
from services.experiment_service import derive_seeds
from utils.config_parser import build_config, parse_config, parse_node_range

logger = logging.getLogger(__name__)

DEFENSE_MODES = {
    "both": (True, False),
    "on": (True,),
    "off": (False,),
}


@click.command("sweep")
@click.option("--nodes", "node_range", required=True, help="노드 수 범위 (start:stop:step, stop 포함)")
@click.option("--attackers", "n_attackers", type=click.IntRange(min=0), default=None,
              help="지점마다의 공격 노드 수 (기본: 시나리오 그대로)")
@click.option("--defense", type=click.Choice(sorted(DEFENSE_MODES)), default="both",
              help="방어 설정")
@click.option("--config", "config_path", type=click.Path(path_type=Path), default=None,
              help="기준 시나리오 파일")
@click.option("--out", "out_dir", type=click.Path(path_type=Path), default=None,
              help="결과 디렉토리 (기본: results/)")
@click.option("--seeds", type=click.IntRange(min=1), default=None, help="지점별 시드 수")
@click.option("--paper-scale", "paper_scale", is_flag=True, help="전체 규모 (500초, 50회)")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="병렬 프로세스 수")
@handle_cli_errors
def sweep_command(
    node_range: str,
    n_attackers: Optional[int],
    defense: str,
    config_path: Optional[Path],
    out_dir: Optional[Path],
    seeds: Optional[int],
    paper_scale: bool,
    workers: Optional[int]
) -> None:
    """노드 수 스윕 실행"""
    settings = get_settings(paper_scale)
    node_counts = parse_node_range(node_range)

    if config_path is not None:
        template: ScenarioConfig = parse_config(config_path)
    else:
        template = build_config({"scenario_id": "sweep", "n_nodes": max(node_counts)})
    template = apply_settings_defaults(template, settings)
    seed_list = derive_seeds(template.seed, seeds or template.repetitions)

    logger.info(
        f"sweep 시작: 노드 {node_counts}, 방어 {defense}, "
        f"{template.sim_duration_s}초 × 시드 {len(seed_list)}개"
    )
    service = get_experiment_service(settings, workers)
    result = service.sweep(template, node_counts, seed_list, n_attackers, DEFENSE_MODES[defense])

    storage = get_results_storage(settings)
    target_dir = out_dir if out_dir is not None else settings.results_dir
    written = storage.save_runs(result.runs, result.summaries, Path(target_dir) / "results.csv")
    storage.save_gains(result.gains, target_dir)
    render_summaries(result.summaries, result.gains)
    click.echo(f"결과 저장: {written.parent}")
