"""
로깅 메시지 포맷 정의

실행, 방어, 실험 단계의 표준 로그 메시지
"""


class LogFormat:
    """로깅 메시지 템플릿"""

    # 실행
    RUN_START = "실행 시작: {scenario_id} (노드 {n_nodes}, 공격 {n_attackers}, 방어 {defense}, 시드 {seed})"
    RUN_END = "실행 완료: {scenario_id} 시드 {seed} - 처리량 {throughput_bps:.0f} bps, 탐지 {detections}"

    # 방어
    DETECTION = "악성 RTS 탐지: 노드 {offender}, 요구 {claimed_us} µs > 임계값 {threshold_us} µs (t={at} µs)"
    FALSE_POSITIVE = "오탐: 정상 노드 {offender}가 악성으로 판정됨 (t={at} µs)"
    BLACKLIST_APPLY = "블랙리스트 적용: 노드 {node} ← {offender} (t={at} µs)"

    # 실험
    SWEEP_POINT = "설정 지점 완료: 노드 {n_nodes}, 방어 {defense} - 평균 {mean:.0f} bps"
    GAIN = "방어 이득: 노드 {n_nodes} - {ratio:.3f}배"
    CSV_WRITTEN = "결과 저장: {path} ({rows}행)"

    # 설정
    CONFIG_ERROR = "설정 오류: [{key}] {message}"


def format_log_message(template: str, **kwargs) -> str:
    """템플릿 포맷팅, 키가 빠지면 예외 대신 진단 문자열 반환"""
    try:
        return template.format(**kwargs)
    except KeyError as e:
        return f"로그 포맷 오류 - 누락된 키: {e}, 템플릿: {template}"
