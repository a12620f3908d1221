"""
릴레이 선택 지표

HF (이력), IF (간섭), SF = HF / (1 + IF)
"""

from core.exceptions import AccountingError


def history_factor(successes: int, attempts: int) -> float:
    """
    이력 지표 HF = (successes + 1) / (attempts + 1)

    시도 이력이 없으면 1.0 (낙관적 초기값)

    Raises:
        AccountingError: successes > attempts
    """
    if successes < 0 or attempts < 0 or successes > attempts:
        raise AccountingError(f"잘못된 이력 카운터: successes={successes}, attempts={attempts}")
    return (successes + 1) / (attempts + 1)


def interference_factor(neighbors: int, max_neighbors: int, concurrent_tx: int) -> float:
    """
    간섭 지표 IF = neighbors / max_neighbors + concurrent_tx

    노드가 하나뿐인 망(max_neighbors == 0)에서는 0
    """
    if max_neighbors <= 0:
        return 0.0
    return neighbors / max_neighbors + concurrent_tx


def selection_factor(hf: float, if_: float) -> float:
    """선택 지표 SF = HF / (1 + IF), 값의 범위는 ]0, 1]"""
    return hf / (1.0 + if_)
