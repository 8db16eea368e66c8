"""Visualization exports: Graphviz DOT and GraphML.

Nodes are coloured by CIP class (Core blue, Intermediate lightyellow,
Peripheral red) and sized by angle: ``max(angle, 1)`` scaled so the
largest node gets 2.0, with a floor of 0.2.  Rendering is left to
external tools.
"""

from __future__ import annotations

from typing import Any

import networkx as nx

from cipnet.cip.constants import CLASS_COLORS
from cipnet.cip.dtos import CipRecord, NetworkReport
from cipnet.cip.exceptions import NodeSetMismatch
from cipnet.graphs.models import Graph

MAX_NODE_SIZE = 2.0
MIN_NODE_SIZE = 0.2


def _records_by_node(report: NetworkReport, g: Graph) -> dict[str, CipRecord]:
    by_node = {record.node: record for record in report.records}
    if set(by_node) != set(g.labels):
        missing = sorted(set(g.labels) - set(by_node))
        extra = sorted(set(by_node) - set(g.labels))
        raise NodeSetMismatch(
            "Report and graph describe different nodes.",
            missing_from_report=missing[:10],
            missing_from_graph=extra[:10],
        )
    return by_node


def node_sizes(records: dict[str, CipRecord]) -> dict[str, float]:
    scaled = {node: max(record.angle_deg, 1.0) for node, record in records.items()}
    top = max(scaled.values(), default=1.0)
    return {
        node: max(MAX_NODE_SIZE * value / top, MIN_NODE_SIZE)
        for node, value in scaled.items()
    }


def node_attributes(report: NetworkReport, g: Graph) -> dict[str, dict[str, Any]]:
    """Raises:
    NodeSetMismatch: the report's nodes differ from the graph's.
    """
    records = _records_by_node(report, g)
    sizes = node_sizes(records)
    return {
        label: {
            "class": str(records[label].node_class),
            "color": CLASS_COLORS[records[label].node_class],
            "size": sizes[label],
            "cip": records[label].angle_deg,
        }
        for label in g.labels
    }


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def report_to_dot(report: NetworkReport, g: Graph, name: str = "cip") -> str:
    attributes = node_attributes(report, g)
    lines = [f"graph {_quote(name)} {{", "  node [style=filled];"]
    for label in g.labels:
        attrs = attributes[label]
        lines.append(
            f"  {_quote(label)} ["
            f'color="{attrs["color"]}", '
            f'size={attrs["size"]:.4f}, '
            f'cip={attrs["cip"]:.4f}, '
            f'class="{attrs["class"]}"];'
        )
    for u, v in g.edges():
        lines.append(f"  {_quote(g.labels[u])} -- {_quote(g.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_to_networkx(report: NetworkReport, g: Graph) -> nx.Graph:
    attributes = node_attributes(report, g)
    nx_graph = nx.Graph()
    for label in g.labels:
        nx_graph.add_node(label, **attributes[label])
    nx_graph.add_edges_from((g.labels[u], g.labels[v]) for u, v in g.edges())
    return nx_graph


def report_to_graphml(report: NetworkReport, g: Graph) -> str:
    return "\n".join(nx.generate_graphml(report_to_networkx(report, g))) + "\n"
