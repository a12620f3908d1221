"""
통계 유틸리티

시드별 반복 결과의 평균과 Student-t 95% 신뢰구간 반폭
"""

from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.stats


def aggregate_ci95(values: Sequence[float]) -> Tuple[float, Optional[float]]:
    """
    평균과 95% 신뢰구간 반폭

    half_width = t(0.975, n-1) · s / √n (s는 표본 표준편차)

    Args:
        values: 1개 이상의 값

    Returns:
        Tuple[float, Optional[float]]: (평균, 반폭). 값이 1개면 반폭은 None

    Raises:
        ValueError: 값이 없는 경우
    """
    arr = np.asarray(values, dtype=float)
    n = arr.size
    if n == 0:
        raise ValueError("신뢰구간 계산에는 1개 이상의 값이 필요합니다")

    mean = float(arr.mean())
    if n == 1:
        return mean, None

    sem = float(arr.std(ddof=1)) / np.sqrt(n)
    return mean, float(scipy.stats.t.ppf(0.975, n - 1) * sem)


def gain_ratio(defended_mean: float, undefended_mean: float) -> Optional[float]:
    """방어 이득 비율 (방어 off 평균이 0이면 None)"""
    if undefended_mean == 0:
        return None
    return defended_mean / undefended_mean
