"""
CLI 명령 모듈

run / sweep 명령과 공통 오류 처리
"""

import functools

import click

from core.exceptions import ConfigError, ResultsStorageError

# 종료 코드
EXIT_CONFIG_ERROR = 2
EXIT_IO_ERROR = 3


def handle_cli_errors(func):
    """설정 오류는 종료 코드 2, 입출력 오류는 3으로 변환"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ConfigError as e:
            click.echo(f"오류: {e}", err=True)
            raise SystemExit(EXIT_CONFIG_ERROR)
        except ResultsStorageError as e:
            click.echo(f"오류: {e}", err=True)
            raise SystemExit(EXIT_IO_ERROR)
    return wrapper
