"""
로깅 설정 관리

시뮬레이터 CLI와 워커 프로세스의 로깅을 한 곳에서 구성한다.
콘솔은 rich 핸들러(stderr), 파일은 로테이팅 핸들러, 선택적으로 JSON 레코드.
"""

import functools
import json
import logging
import logging.handlers
import time
from datetime import datetime
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from app.config import settings

# 실행 컨텍스트로 레코드에 붙는 필드
CONTEXT_FIELDS = ("run_id", "scenario_id", "seed", "sim_time_us", "node")

PLAIN_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# 시뮬레이터 패키지 로거
SIM_LOGGERS = ("app", "core", "services", "storage", "models", "utils")


class JSONFormatter(logging.Formatter):
    """한 줄 JSON 레코드 포매터"""

    def format(self, record: logging.LogRecord) -> str:
        entry = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        for key in CONTEXT_FIELDS:
            value = getattr(record, key, None)
            if value is not None:
                entry[key] = value

        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)

        return json.dumps(entry, ensure_ascii=False)


def _console_handler(level: int, as_json: bool) -> logging.Handler:
    if as_json:
        handler: logging.Handler = logging.StreamHandler()
        handler.setFormatter(JSONFormatter())
    else:
        # CSV/표 출력(stdout)과 섞이지 않도록 stderr
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=settings.debug,
            rich_tracebacks=settings.debug,
            markup=False,
        )
        handler.setFormatter(logging.Formatter("%(message)s", datefmt="%H:%M:%S"))
    handler.setLevel(level)
    return handler


def _file_handler(log_file: str, level: int, as_json: bool) -> logging.Handler:
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)

    # 10MB 단위 로테이션, 최대 5개
    handler = logging.handlers.RotatingFileHandler(
        filename=path, maxBytes=10 * 1024 * 1024, backupCount=5, encoding="utf-8"
    )
    handler.setLevel(level)
    handler.setFormatter(
        JSONFormatter() if as_json else logging.Formatter(PLAIN_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")
    )
    return handler


def setup_logging(
    log_level: Optional[str] = None,
    log_file: Optional[str] = None,
    enable_console: bool = True,
    enable_file: bool = True,
    enable_json: Optional[bool] = None
) -> None:
    """로깅 시스템 설정

    Args:
        log_level: 로그 레벨 (없으면 COOPSIM_LOG_LEVEL)
        log_file: 로그 파일 경로 (없으면 COOPSIM_LOG_FILE)
        enable_console: 콘솔 로그 여부
        enable_file: 파일 로그 여부
        enable_json: JSON 레코드 여부 (None이면 COOPSIM_LOG_JSON)
    """
    level_name = (log_level or settings.log_level).upper()
    log_file = log_file or settings.log_file
    as_json = settings.log_json if enable_json is None else enable_json
    level = getattr(logging, level_name, logging.INFO)

    root = logging.getLogger()
    root.setLevel(level)
    for handler in root.handlers[:]:
        root.removeHandler(handler)

    if enable_console:
        root.addHandler(_console_handler(level, as_json))
    if enable_file and log_file:
        root.addHandler(_file_handler(log_file, level, as_json))

    configure_loggers(level)

    logging.getLogger(__name__).debug(
        f"로깅 초기화 - 레벨: {level_name}, 파일: {log_file if enable_file else '비활성화'}, "
        f"JSON: {'활성화' if as_json else '비활성화'}"
    )


def configure_loggers(level: int = logging.INFO) -> None:
    """시뮬레이터 패키지 로거 레벨 설정"""
    for name in SIM_LOGGERS:
        logging.getLogger(name).setLevel(logging.DEBUG if settings.debug else level)

    # 병렬 실행 시 concurrent.futures 내부 로그 억제
    logging.getLogger("concurrent.futures").setLevel(logging.WARNING)


def get_logger(name: str, **context) -> logging.LoggerAdapter:
    """실행 컨텍스트(scenario_id, seed 등)가 붙는 로거 어댑터"""
    unknown = set(context) - set(CONTEXT_FIELDS)
    if unknown:
        raise ValueError(f"알 수 없는 로그 컨텍스트 필드: {sorted(unknown)}")
    return logging.LoggerAdapter(logging.getLogger(name), context)


def log_performance(logger_name: Optional[str] = None):
    """함수 실행 시간을 DEBUG로 기록하는 데코레이터"""
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger = logging.getLogger(logger_name or func.__module__)
            started = time.perf_counter()
            try:
                return func(*args, **kwargs)
            except Exception as e:
                logger.error(f"{func.__name__} 실패 - {time.perf_counter() - started:.3f}s: {e}")
                raise
            finally:
                logger.debug(f"{func.__name__} 종료 - {time.perf_counter() - started:.3f}s")
        return wrapper
    return decorator
