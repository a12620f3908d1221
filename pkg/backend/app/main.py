"""
협력 WLAN RTS 공격 시뮬레이터 - CLI 진입점

802.11 DCF 셀에서 협력 릴레이, RTS duration 부풀리기 공격, AP 재검증 방어를 시뮬레이션
"""

import logging
import sys
from pathlib import Path
from typing import Optional

import click

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from app.commands.run import run_command
from app.commands.sweep import sweep_command
from utils.logging_config import setup_logging

logger = logging.getLogger(__name__)


@click.group()
@click.option("--log-level", default=None, help="로그 레벨 (기본: COOPSIM_LOG_LEVEL)")
@click.option("--log-json", is_flag=True, help="JSON 형식 로그 (기본: COOPSIM_LOG_JSON)")
@click.option("--no-log-file", is_flag=True, help="파일 로그 비활성화")
def cli(log_level: Optional[str], log_json: bool, no_log_file: bool) -> None:
    """협력 WLAN 시뮬레이터"""
    setup_logging(log_level=log_level, enable_file=not no_log_file, enable_json=True if log_json else None)


cli.add_command(run_command)
cli.add_command(sweep_command)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
