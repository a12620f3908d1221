"""
시드 기반 난수 스트림

하나의 시드에서 topology / backoff / traffic 세 개의 독립 생성기를 파생
"""

from typing import Dict

import numpy as np

from core.exceptions import SchedulingError

STREAM_NAMES = ("topology", "backoff", "traffic")


class RandomStreams:
    """이름 붙은 독립 난수 스트림 묶음"""

    def __init__(self, seed: int):
        if seed < 0:
            raise SchedulingError(f"시드는 음수일 수 없습니다: {seed}")
        children = np.random.SeedSequence(seed).spawn(len(STREAM_NAMES))
        self._generators: Dict[str, np.random.Generator] = {
            name: np.random.default_rng(child)
            for name, child in zip(STREAM_NAMES, children)
        }

    def generator(self, stream: str) -> np.random.Generator:
        """스트림 이름으로 생성기 반환"""
        try:
            return self._generators[stream]
        except KeyError:
            raise SchedulingError(f"알 수 없는 난수 스트림: {stream}") from None

    def uniform_int(self, stream: str, lo: int, hi: int) -> int:
        """
        [lo, hi] 구간 균등 정수

        Raises:
            SchedulingError: lo > hi 인 경우
        """
        if lo > hi:
            raise SchedulingError(f"잘못된 난수 범위: lo={lo} > hi={hi}")
        return int(self.generator(stream).integers(lo, hi, endpoint=True))
