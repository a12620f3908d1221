"""
시나리오 설정 모델

한 번의 시뮬레이션 실행을 정의하는 Pydantic 모델 (노드 수, 페이로드, 공격 노드, 방어 여부 등)
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator, validator

from core.channel.rates import BASE_RATE
from core.exceptions import DurationOverflowError
from core.mac.duration import compute_duration
from core.mac.timing import MAX_DURATION_US


class AttackMode(str, Enum):
    """공격 방식"""
    INFLATE = "inflate"     # duration 부풀리기
    FLOOD = "flood"         # 주기적 RTS 범람


class AttackerConfig(BaseModel):
    """공격 노드 설정"""
    model_config = ConfigDict(extra="forbid")

    node_id: Optional[int] = Field(None, description="공격 노드 ID (없으면 가장 큰 ID부터 배정)")
    mode: AttackMode = Field(default=AttackMode.INFLATE, description="공격 방식")
    claimed_us: int = Field(
        default=MAX_DURATION_US,
        ge=0,
        le=MAX_DURATION_US,
        description="부풀린 RTS duration (µs)"
    )
    period_us: int = Field(default=5000, ge=1, description="RTS 범람 주기 (µs)")
    start_at_us: int = Field(default=0, ge=0, description="공격 시작 시각 (µs)")


class ScenarioConfig(BaseModel):
    """시뮬레이션 시나리오 설정"""
    model_config = ConfigDict(extra="forbid")

    scenario_id: str = Field(default="scenario", description="시나리오 식별자")
    n_nodes: int = Field(..., ge=1, le=200, description="스테이션 수 (정상 + 공격, AP 제외)")
    sim_duration_s: int = Field(default=500, gt=0, description="시뮬레이션 시간 (초)")
    payload_bytes: int = Field(default=2048, ge=0, description="공칭 페이로드 크기 (바이트)")
    attackers: List[AttackerConfig] = Field(default_factory=list, description="공격 노드 목록")
    defense_enabled: bool = Field(default=True, description="재검증 방어 사용 여부")
    seed: int = Field(default=1, ge=0, lt=2 ** 64, description="기본 시드")
    repetitions: int = Field(default=50, ge=1, description="반복 횟수 (시드 수)")
    record_trace: bool = Field(default=False, description="전체 이벤트 로그 보관 여부")

    @validator("scenario_id")
    def validate_scenario_id(cls, v):
        """시나리오 ID 유효성 검증"""
        if not v or v.strip() == "":
            raise ValueError("scenario_id는 비어있을 수 없습니다")
        return v.strip()

    @validator("payload_bytes")
    def validate_payload_bytes(cls, v):
        """가장 느린 전송률에서도 duration 필드에 담기는지 확인"""
        try:
            compute_duration(v, BASE_RATE)
        except DurationOverflowError as e:
            raise ValueError(
                f"페이로드 {v}B는 1 Mbps에서 duration {e.duration_us} µs로 "
                f"최대값 {MAX_DURATION_US} µs를 넘습니다"
            )
        return v

    @model_validator(mode="after")
    def assign_attacker_ids(self) -> "ScenarioConfig":
        """공격 노드 수 검증 및 ID 배정"""
        if len(self.attackers) >= self.n_nodes:
            raise ValueError(
                f"attackers: 공격 노드 수({len(self.attackers)})는 "
                f"n_nodes({self.n_nodes})보다 작아야 합니다"
            )

        taken = set()
        for attacker in self.attackers:
            if attacker.node_id is None:
                continue
            if not 1 <= attacker.node_id <= self.n_nodes:
                raise ValueError(f"attackers: node_id {attacker.node_id}는 1..{self.n_nodes} 범위여야 합니다")
            if attacker.node_id in taken:
                raise ValueError(f"attackers: node_id {attacker.node_id}가 중복되었습니다")
            taken.add(attacker.node_id)

        next_id = self.n_nodes
        assigned = []
        for attacker in self.attackers:
            if attacker.node_id is None:
                while next_id in taken:
                    next_id -= 1
                attacker = attacker.model_copy(update={"node_id": next_id})
                taken.add(next_id)
            assigned.append(attacker)
        self.attackers = assigned
        return self

    @property
    def sim_duration_us(self) -> int:
        return self.sim_duration_s * 1_000_000

    @property
    def attacker_ids(self) -> List[int]:
        return sorted(a.node_id for a in self.attackers)

    @property
    def n_attackers(self) -> int:
        return len(self.attackers)

    @property
    def n_honest(self) -> int:
        return self.n_nodes - len(self.attackers)

    @property
    def attack_mode(self) -> str:
        """CSV용 공격 방식 표기 (공격 없음은 none, 혼합은 +로 연결)"""
        if not self.attackers:
            return "none"
        return "+".join(sorted({a.mode.value for a in self.attackers}))
