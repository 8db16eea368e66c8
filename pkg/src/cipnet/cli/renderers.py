"""Report renderers: JSON, CSV and a fixed-width text table.

All three share the same values; ``decimals`` rounds floats for display
and ``None`` keeps full precision.  CSV output is split into sections
introduced by ``# <name>`` lines, like the factor audit dump.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from typing import Any

from cipnet.centrality.exporters import centrality_table_to_csv, format_value
from cipnet.centrality.models import METRIC_ROWS, CentralityTable
from cipnet.cip.dtos import CipRecord, NetworkReport

RECORD_COLUMNS: tuple[str, ...] = (
    "node",
    "deg",
    "evc",
    "bwc",
    "clc",
    "k_core",
    "coreness",
    "p_load",
    "c_load",
    "cip_deg",
    "bin",
    "class",
    "rank",
)
SUMMARY_COLUMNS: tuple[str, ...] = (
    "n",
    "m",
    "lambda_sp",
    "core_frac",
    "intermediate_frac",
    "peripheral_frac",
    "classification",
    "quadrant_reflected_count",
    "single_factor",
)


def _rounded(value: Any, decimals: int | None) -> Any:
    if decimals is None:
        return value
    if isinstance(value, float):
        return round(value, decimals)
    if isinstance(value, list):
        return [_rounded(item, decimals) for item in value]
    if isinstance(value, dict):
        return {key: _rounded(item, decimals) for key, item in value.items()}
    return value


def _cell(value: Any, decimals: int | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format_value(value, decimals)
    return str(value)


def _summary_row(report: NetworkReport) -> dict[str, Any]:
    summary = report.network_summary()
    core, intermediate, peripheral = summary.pop("tuple")
    summary.update(
        core_frac=core, intermediate_frac=intermediate, peripheral_frac=peripheral
    )
    return summary


def _csv(rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    return buffer.getvalue()


def _text_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [
        max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows)
    return "\n".join(lines) + "\n"


def _record_cells(records: Sequence[CipRecord], decimals: int | None) -> list[list[str]]:
    return [
        [_cell(record.to_row()[column], decimals) for column in RECORD_COLUMNS]
        for record in records
    ]


# ---------------------------------------------------------------------------
# Per-node records (``rank``)
# ---------------------------------------------------------------------------


def render_records(
    records: Sequence[CipRecord], fmt: str, decimals: int | None = 4
) -> str:
    if fmt == "json":
        rows = [_rounded(record.to_row(), decimals) for record in records]
        return json.dumps(rows, indent=2) + "\n"
    cells = _record_cells(records, decimals)
    if fmt == "csv":
        return _csv([list(RECORD_COLUMNS), *cells])
    return _text_table(RECORD_COLUMNS, cells)


# ---------------------------------------------------------------------------
# Full report (``analyze``)
# ---------------------------------------------------------------------------


def render_report(report: NetworkReport, fmt: str, decimals: int | None = 4) -> str:
    if fmt == "json":
        return json.dumps(_rounded(report.to_dict(), decimals), indent=2) + "\n"
    summary = _summary_row(report)
    summary_cells = [_cell(summary[column], decimals) for column in SUMMARY_COLUMNS]
    if fmt == "csv":
        return (
            "# network\n"
            + _csv([list(SUMMARY_COLUMNS), summary_cells])
            + "# records\n"
            + render_records(report.records, "csv", decimals)
        )
    summary_lines = "".join(
        f"{column}: {cell}\n" for column, cell in zip(SUMMARY_COLUMNS, summary_cells)
    )
    return summary_lines + "\n" + render_records(report.records, "table", decimals)


# ---------------------------------------------------------------------------
# Centrality table (``metrics``)
# ---------------------------------------------------------------------------


def render_centrality(table: CentralityTable, fmt: str, decimals: int | None = 4) -> str:
    if fmt == "csv":
        return centrality_table_to_csv(table, decimals=decimals)
    if fmt == "json":
        payload: dict[str, Any] = {"labels": list(table.labels)}
        payload["DEG"] = [int(d) for d in table.deg]
        for metric in METRIC_ROWS[1:]:
            payload[metric] = _rounded([float(v) for v in table.row(metric)], decimals)
        return json.dumps(payload, indent=2) + "\n"
    rows = [
        ["DEG", *(str(int(d)) for d in table.deg)],
        *(
            [metric, *(format_value(v, decimals) for v in table.row(metric))]
            for metric in METRIC_ROWS[1:]
        ),
    ]
    return _text_table(["metric", *table.labels], rows)
