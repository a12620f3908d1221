"""
애플리케이션 설정 관리

Pydantic Settings를 사용한 환경변수 기반 설정 관리
"""

import os
from pathlib import Path
from typing import Optional

from pydantic import Field, validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """애플리케이션 설정 클래스"""

    # ===== 실행 설정 =====
    debug: bool = Field(default=False, description="디버그 모드")
    results_dir: Path = Field(
        default=Path("results"),
        description="결과 CSV 저장 디렉토리"
    )

    # ===== 시뮬레이션 기본값 (데스크 규모) =====
    sim_duration_s: int = Field(
        default=50,
        gt=0,
        description="시나리오 파일에 없을 때의 시뮬레이션 시간 (초)"
    )
    repetitions: int = Field(
        default=10,
        ge=1,
        description="시나리오 파일에 없을 때의 반복 횟수"
    )
    base_seed: int = Field(
        default=1,
        ge=0,
        description="시드 파생 기준값"
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="시드 병렬 실행 프로세스 수"
    )
    record_trace: bool = Field(
        default=False,
        description="전체 이벤트 로그 보관 여부"
    )

    # ===== 로깅 설정 =====
    log_level: str = Field(
        default="INFO",
        description="로그 레벨"
    )
    log_file: Optional[str] = Field(
        default="logs/coopsim.log",
        description="로그 파일 경로"
    )
    log_json: bool = Field(
        default=False,
        description="JSON 형식 로그 사용 여부"
    )

    @validator('results_dir')
    def create_directories(cls, v):
        """디렉토리가 존재하지 않으면 생성"""
        if isinstance(v, str):
            v = Path(v)
        v.mkdir(exist_ok=True, parents=True)
        return v

    @validator('log_level')
    def normalize_log_level(cls, v):
        """로그 레벨을 대문자로 정규화"""
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"알 수 없는 로그 레벨: {v}")
        return level

    @property
    def full_scale(self) -> bool:
        return False

    class Config:
        """Pydantic 설정"""
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False

        # 환경변수 접두사 설정
        env_prefix = "COOPSIM_"


# 전역 설정 인스턴스
settings = Settings()


class FullScaleSettings(Settings):
    """전체 규모 설정 (500초, 50회 반복)"""
    sim_duration_s: int = 500
    repetitions: int = 50

    @property
    def full_scale(self) -> bool:
        return True


def get_settings(full_scale: bool = False) -> Settings:
    """실행 규모에 따른 설정 반환"""
    env = os.getenv("COOPSIM_ENVIRONMENT", "desk").lower()

    if full_scale or env == "full":
        return FullScaleSettings()
    return Settings()
