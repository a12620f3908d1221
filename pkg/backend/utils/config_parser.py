"""
시나리오 파일 파서

UTF-8 평문 `key = value` 형식 (한 줄에 하나, # 이후는 주석).
공격 노드는 `attackers[0].mode = inflate` 처럼 인덱스 키로 지정한다.
없는 키는 ScenarioConfig 기본값, 모르는 키는 거부.
"""

import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import ValidationError

from core.exceptions import ConfigError
from models.scenario_models import AttackerConfig, ScenarioConfig
from utils.logging_constants import LogFormat, format_log_message

logger = logging.getLogger(__name__)

_ATTACKER_KEY = re.compile(r"^attackers\[(\d+)\]\.(\w+)$")
_SCALAR_KEYS = set(ScenarioConfig.model_fields) - {"attackers"}
_ATTACKER_FIELDS = set(AttackerConfig.model_fields)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _unquote(value: str) -> str:
    if len(value) >= 2 and value[0] == value[-1] and value[0] in ("'", '"'):
        return value[1:-1]
    return value


def _error_key(loc: tuple) -> str:
    """pydantic 오류 위치를 설정 키 표기로 변환"""
    if not loc:
        return "attackers"
    if loc[0] == "attackers" and len(loc) >= 3:
        return f"attackers[{loc[1]}].{loc[2]}"
    if loc[0] == "attackers" and len(loc) == 2:
        return f"attackers[{loc[1]}]"
    return str(loc[0])


def build_config(values: Dict[str, Any]) -> ScenarioConfig:
    """
    키-값 사전을 검증된 ScenarioConfig로 변환

    Raises:
        ConfigError: 검증 실패 (첫 오류의 키를 보관)
    """
    try:
        return ScenarioConfig.model_validate(values)
    except ValidationError as e:
        first = e.errors()[0]
        key = _error_key(tuple(first.get("loc", ())))
        message = first.get("msg", str(e))
        logger.debug(format_log_message(LogFormat.CONFIG_ERROR, key=key, message=message))
        raise ConfigError(key, message) from e


def parse_config_text(text: str) -> ScenarioConfig:
    """시나리오 파일 내용 파싱"""
    scalars: Dict[str, str] = {}
    attackers: Dict[int, Dict[str, str]] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(line, "'key = value' 형식이 아닙니다", line=line_no)

        key, value = (part.strip() for part in line.split("=", 1))
        value = _unquote(value)
        if not key:
            raise ConfigError("<empty>", "키가 비어 있습니다", line=line_no)

        match = _ATTACKER_KEY.match(key)
        if match:
            index, attr = int(match.group(1)), match.group(2)
            if attr not in _ATTACKER_FIELDS:
                raise ConfigError(key, "알 수 없는 공격 노드 설정 키입니다", line=line_no)
            entry = attackers.setdefault(index, {})
            if attr in entry:
                raise ConfigError(key, "중복된 키입니다", line=line_no)
            entry[attr] = value
        elif key in _SCALAR_KEYS:
            if key in scalars:
                raise ConfigError(key, "중복된 키입니다", line=line_no)
            scalars[key] = value
        else:
            raise ConfigError(key, "알 수 없는 설정 키입니다", line=line_no)

    values: Dict[str, Any] = dict(scalars)
    if attackers:
        indexes = sorted(attackers)
        if indexes != list(range(len(indexes))):
            missing = next(i for i in range(len(indexes) + 1) if i not in attackers)
            raise ConfigError(f"attackers[{missing}]", "공격 노드 인덱스는 0부터 연속이어야 합니다")
        values["attackers"] = [attackers[i] for i in indexes]

    return build_config(values)


def parse_config(path: Union[str, Path]) -> ScenarioConfig:
    """
    시나리오 파일 파싱

    Args:
        path: 시나리오 파일 경로

    Returns:
        ScenarioConfig: 검증된 설정

    Raises:
        ConfigError: 파일을 읽을 수 없거나 형식/검증 오류
    """
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError("config", f"시나리오 파일을 읽을 수 없습니다: {file_path} ({e})") from e

    config = parse_config_text(text)
    logger.debug(f"시나리오 파일 로드 완료: {file_path} (scenario_id={config.scenario_id})")
    return config


def parse_node_range(text: str) -> List[int]:
    """
    노드 수 범위 파싱

    `start:stop:step` (stop 포함), `a,b,c`, 또는 단일 값

    Raises:
        ConfigError: 형식 오류 또는 빈 범위
    """
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) == 2:
                parts.append(1)
            if len(parts) != 3 or parts[2] <= 0:
                raise ValueError(text)
            start, stop, step = parts
            counts = list(range(start, stop + 1, step))
        else:
            counts = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ConfigError("nodes", f"노드 범위 형식 오류: {text}") from None

    if not counts:
        raise ConfigError("nodes", f"빈 노드 범위입니다: {text}")
    return counts
