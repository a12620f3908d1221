"""
실행 결과 모델

단일 실행 지표(RunMetrics)와 설정 지점별 요약(ConfigPointSummary)
"""

from typing import Dict, Optional

from pydantic import BaseModel, Field, model_validator


class RunMetrics(BaseModel):
    """한 번의 (설정, 시드) 실행 결과"""

    # 실행 식별
    scenario_id: str = Field(..., description="시나리오 식별자")
    n_nodes: int = Field(..., description="스테이션 수")
    n_attackers: int = Field(default=0, description="공격 노드 수")
    attack_mode: str = Field(default="none", description="공격 방식")
    defense_enabled: bool = Field(..., description="방어 사용 여부")
    seed: int = Field(..., description="실행 시드")

    # MAC 처리량
    sim_duration_us: int = Field(..., gt=0, description="시뮬레이션 시간 (µs)")
    payload_bytes: int = Field(..., description="페이로드 크기")
    delivered_exchanges: int = Field(default=0, description="AP가 ACK한 고유 교환 수")
    delivered_payload_bits: int = Field(default=0, description="전달된 페이로드 비트")
    per_node_delivered_bits: Dict[int, int] = Field(default_factory=dict, description="노드별 전달 비트")

    # 카운터
    detections: int = Field(default=0, description="AP가 악성으로 판정한 고유 송신자 수")
    false_positives: int = Field(default=0, description="공격 노드가 아닌데 판정된 송신자 수")
    rts_sent: int = Field(default=0, description="송신된 RTS 수 (공격 노드 포함)")
    collisions: int = Field(default=0, description="수신 대상에서 충돌한 유니캐스트 프레임 수")
    relayed_exchanges: int = Field(default=0, description="릴레이를 거쳐 성공한 교환 수")
    relay_failures: int = Field(default=0, description="릴레이 교환 실패 수")
    dropped: int = Field(default=0, description="재시도 한도로 버린 페이로드 수")
    broadcast_airtime_us: int = Field(default=0, description="BLACKLIST 브로드캐스트 누적 전송 시간")
    first_forged_decode_us: Optional[int] = Field(None, description="AP가 위조 RTS를 처음 복호한 시각")
    first_detection_us: Optional[int] = Field(None, description="첫 악성 판정 시각")

    # 추적
    events_processed: int = Field(default=0, description="처리된 이벤트 수")
    trace_digest: str = Field(default="", description="이벤트 로그 SHA-256")

    @model_validator(mode="after")
    def check_delivered_bits(self) -> "RunMetrics":
        """전달 비트 = 8 · 페이로드 · 교환 수"""
        expected = 8 * self.payload_bytes * self.delivered_exchanges
        if self.delivered_payload_bits != expected:
            raise ValueError(
                f"delivered_payload_bits 불일치: {self.delivered_payload_bits} != {expected}"
            )
        return self

    @property
    def throughput_bps(self) -> float:
        return mac_throughput(self)


def mac_throughput(metrics: RunMetrics) -> float:
    """MAC 처리량 (bit/s)"""
    return metrics.delivered_payload_bits / (metrics.sim_duration_us / 1_000_000)


class ConfigPointSummary(BaseModel):
    """설정 지점(시나리오, 노드 수, 방어 여부)별 시드 집계"""

    scenario_id: str
    n_nodes: int
    n_attackers: int
    attack_mode: str
    defense: bool
    runs: int = Field(..., ge=0)
    mean: float = Field(..., description="평균 MAC 처리량 (bit/s)")
    ci95_half: Optional[float] = Field(None, description="95% 신뢰구간 반폭 (n=1이면 없음)")
    mean_detections: float = 0.0
    mean_broadcast_airtime_us: float = 0.0
