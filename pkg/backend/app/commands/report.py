"""
콘솔 요약 표 출력 (rich)
"""

from typing import Iterable, Optional

import pandas as pd
from rich.console import Console
from rich.table import Table

from models.metrics_models import ConfigPointSummary


def render_summaries(
    summaries: Iterable[ConfigPointSummary],
    gains: Optional[pd.DataFrame] = None,
    console: Optional[Console] = None
) -> None:
    """설정 지점별 평균 처리량과 방어 이득 출력"""
    console = console or Console()

    table = Table(title="MAC 처리량 요약")
    table.add_column("시나리오")
    table.add_column("노드", justify="right")
    table.add_column("공격", justify="right")
    table.add_column("방어")
    table.add_column("실행", justify="right")
    table.add_column("평균 (Mbps)", justify="right")
    table.add_column("±95% CI", justify="right")
    table.add_column("탐지", justify="right")

    for s in summaries:
        half = "-" if s.ci95_half is None else f"{s.ci95_half / 1e6:.3f}"
        table.add_row(
            s.scenario_id,
            str(s.n_nodes),
            f"{s.n_attackers} ({s.attack_mode})",
            "on" if s.defense else "off",
            str(s.runs),
            f"{s.mean / 1e6:.3f}",
            half,
            f"{s.mean_detections:.2f}",
        )
    console.print(table)

    if gains is None or gains.empty:
        return

    gain_view = Table(title="방어 이득 (on / off)")
    gain_view.add_column("노드", justify="right")
    gain_view.add_column("on (Mbps)", justify="right")
    gain_view.add_column("off (Mbps)", justify="right")
    gain_view.add_column("이득", justify="right")
    for row in gains.itertuples(index=False):
        ratio = "-" if pd.isna(row.gain_ratio) else f"{row.gain_ratio:.3f}"
        gain_view.add_row(
            str(row.n_nodes), f"{row.mean_on / 1e6:.3f}", f"{row.mean_off / 1e6:.3f}", ratio
        )
    console.print(gain_view)
