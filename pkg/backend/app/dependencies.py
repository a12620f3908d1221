"""
의존성 구성 관리

CLI 명령에서 공통으로 사용하는 서비스/저장소 생성과 설정 기본값 적용
"""

import logging
from typing import Optional

from app.config import Settings
from models.scenario_models import ScenarioConfig
from services.experiment_service import ExperimentService
from storage.results_storage import ResultsStorage
from utils.config_parser import build_config

logger = logging.getLogger(__name__)


# ===== 서비스 의존성 =====

def get_experiment_service(settings: Settings, workers: Optional[int] = None) -> ExperimentService:
    """실험 서비스 생성"""
    return ExperimentService(workers=workers or settings.workers)


# ===== 스토리지 의존성 =====

def get_results_storage(settings: Settings) -> ResultsStorage:
    """결과 저장소 생성"""
    return ResultsStorage(results_dir=settings.results_dir)


# ===== 설정 적용 =====

def apply_settings_defaults(config: ScenarioConfig, settings: Settings) -> ScenarioConfig:
    """
    시나리오 파일에 없는 실행 규모 값을 현재 설정(데스크/전체 규모)으로 채움

    파일에 명시된 값은 그대로 유지한다.
    """
    explicit = config.model_fields_set
    data = config.model_dump()
    if "sim_duration_s" not in explicit:
        data["sim_duration_s"] = settings.sim_duration_s
    if "repetitions" not in explicit:
        data["repetitions"] = settings.repetitions
    if "seed" not in explicit:
        data["seed"] = settings.base_seed
    if "record_trace" not in explicit:
        data["record_trace"] = settings.record_trace

    resolved = build_config(data)
    logger.debug(
        f"실행 규모 적용: {resolved.sim_duration_s}초, 반복 {resolved.repetitions}회 "
        f"(전체 규모: {settings.full_scale})"
    )
    return resolved
