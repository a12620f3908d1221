"""
시뮬레이터 공통 예외 정의

시뮬레이션 실행을 중단시키는 치명적 오류와 설정 오류를 구분하여 정의
"""

from typing import Optional


class SimulationError(Exception):
    """시뮬레이션 관련 예외의 기본 클래스"""

    def __init__(self, message: str, component: str = "sim"):
        self.message = message
        self.component = component
        super().__init__(f"[{component}] {message}")


class SchedulingError(SimulationError):
    """과거 시각 스케줄링, 잘못된 난수 범위 등 커널 사용 오류"""

    def __init__(self, message: str):
        super().__init__(message, component="sim-engine")


class ChannelError(SimulationError):
    """도달 불가 전송률로의 송신, 중복 송신 등 채널 사용 오류"""

    def __init__(self, message: str):
        super().__init__(message, component="channel")


class DurationOverflowError(SimulationError):
    """정상 예약 시간이 duration 필드(32767 µs)를 초과하는 경우"""

    def __init__(self, duration_us: int, limit_us: int):
        self.duration_us = duration_us
        self.limit_us = limit_us
        super().__init__(
            f"예약 시간 {duration_us} µs가 최대값 {limit_us} µs를 초과합니다",
            component="mac-dcf"
        )


class IllegalTransitionError(SimulationError):
    """현재 DCF 단계에서 허용되지 않는 자극"""

    def __init__(self, phase: str, stimulus: str):
        self.phase = phase
        self.stimulus = stimulus
        super().__init__(
            f"단계 {phase}에서 자극 {stimulus}는 허용되지 않습니다",
            component="mac-dcf"
        )


class AccountingError(SimulationError):
    """릴레이 이력 카운터 불일치 (successes > attempts)"""

    def __init__(self, message: str):
        super().__init__(message, component="coop-relay")


class AttackError(SimulationError):
    """공격 노드 설정/동작 오류"""

    def __init__(self, message: str):
        super().__init__(message, component="threat")


class ConfigError(Exception):
    """시나리오 설정 오류 (문제가 된 키를 함께 보관)"""

    def __init__(self, key: str, message: str, line: Optional[int] = None):
        self.key = key
        self.message = message
        self.line = line
        location = f" (line {line})" if line is not None else ""
        super().__init__(f"설정 오류 [{key}]{location}: {message}")


class ResultsStorageError(Exception):
    """결과 파일 저장 실패"""

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"결과 파일 저장 실패 {path}: {reason}")
