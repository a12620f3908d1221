"""
로깅 유틸리티 테스트
"""

import json
import logging

import pytest

from utils.logging_config import JSONFormatter, get_logger, log_performance
from utils.logging_constants import LogFormat, format_log_message


def make_record(**extra) -> logging.LogRecord:
    record = logging.LogRecord("core.cell", logging.INFO, __file__, 1, "탐지", None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


class TestJSONFormatter:
    def test_context_fields_included(self):
        payload = json.loads(JSONFormatter().format(make_record(scenario_id="s1", seed=3)))
        assert payload["message"] == "탐지"
        assert payload["scenario_id"] == "s1"
        assert payload["seed"] == 3
        assert "node" not in payload

    def test_unknown_attributes_ignored(self):
        payload = json.loads(JSONFormatter().format(make_record(color="red")))
        assert "color" not in payload


def test_get_logger_rejects_unknown_context():
    with pytest.raises(ValueError):
        get_logger("services", tenant="x")
    adapter = get_logger("services", scenario_id="s", seed=1)
    assert adapter.extra == {"scenario_id": "s", "seed": 1}


def test_log_performance_passes_through(caplog):
    @log_performance("tests.perf")
    def add(a, b):
        return a + b

    with caplog.at_level(logging.DEBUG, logger="tests.perf"):
        assert add(2, 3) == 5
    assert any("add 종료" in r.getMessage() for r in caplog.records)


def test_format_log_message_missing_key():
    assert format_log_message(LogFormat.GAIN, n_nodes=10, ratio=1.4) == "방어 이득: 노드 10 - 1.400배"
    assert "누락된 키" in format_log_message(LogFormat.GAIN, n_nodes=10)
