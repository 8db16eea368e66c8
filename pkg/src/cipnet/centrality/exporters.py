"""CSV export of the centrality table.

Header row of node labels, then one row per metric labelled
DEG/EVC/BWC/CLC.
"""

from __future__ import annotations

import csv
import io

from cipnet.centrality.models import METRIC_ROWS, CentralityTable


def format_value(value: float, decimals: int | None) -> str:
    """Render a number; ``decimals=None`` keeps full precision."""
    if decimals is None:
        return repr(float(value))
    return f"{value:.{decimals}f}"


def centrality_table_to_csv(table: CentralityTable, decimals: int | None = 4) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["metric", *table.labels])
    writer.writerow(["DEG", *(str(int(d)) for d in table.deg)])
    for metric in METRIC_ROWS[1:]:
        writer.writerow(
            [metric, *(format_value(v, decimals) for v in table.row(metric))]
        )
    return buffer.getvalue()
