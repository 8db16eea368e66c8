"""Unit tests for the DOT and GraphML exports."""

import networkx as nx
import pytest

from cipnet.cip import NetworkReport, bins_fraction_tuple, classify_network, rank_nodes
from cipnet.cip.exceptions import NodeSetMismatch
from cipnet.cli.exporters import (
    MAX_NODE_SIZE,
    MIN_NODE_SIZE,
    node_attributes,
    report_to_dot,
    report_to_graphml,
)
from cipnet.graphs import parse_edge_list
from tests.unit.cip.factories import at_angle

pytestmark = pytest.mark.unit


class TestDot:
    def test_colours_by_class(self, example_result):
        dot = report_to_dot(example_result.report, example_result.graph)
        assert dot.count('color="blue"') == 3
        assert dot.count('color="lightyellow"') == 2
        assert dot.count('color="red"') == 5

    def test_nodes_and_edges(self, example_result):
        dot = report_to_dot(example_result.report, example_result.graph)
        lines = dot.splitlines()
        assert lines[0] == 'graph "cip" {'
        assert lines[-1] == "}"
        assert sum(" -- " in line for line in lines) == 16
        assert sum("class=" in line for line in lines) == 10


class TestNodeAttributes:
    def test_sizes_are_scaled(self, example_result):
        attributes = node_attributes(example_result.report, example_result.graph)
        sizes = [attrs["size"] for attrs in attributes.values()]
        assert max(sizes) == pytest.approx(MAX_NODE_SIZE)
        assert min(sizes) >= MIN_NODE_SIZE

    def test_mismatched_graph(self, example_result):
        other = parse_edge_list("x y\n")
        with pytest.raises(NodeSetMismatch):
            node_attributes(example_result.report, other)


class TestGraphml:
    def test_round_trips_through_networkx(self, example_result):
        text = report_to_graphml(example_result.report, example_result.graph)
        graph = nx.parse_graphml(text)
        assert graph.number_of_nodes() == 10
        assert graph.number_of_edges() == 16
        assert graph.nodes["1"]["class"] == "Core"
        assert graph.nodes["3"]["color"] == "red"


class TestSingleClassReport:
    def test_all_intermediate(self, path3):
        records = rank_nodes([at_angle(label, 45.0) for label in path3.labels])
        t = bins_fraction_tuple(records)
        report = NetworkReport(
            n=3,
            m=2,
            lambda_sp=1.0,
            fractions=t,
            classification=classify_network(t),
            records=records,
        )
        dot = report_to_dot(report, path3)
        assert dot.count('color="lightyellow"') == 3
        assert 'color="blue"' not in dot
        assert 'color="red"' not in dot
        assert sum(" -- " in line for line in dot.splitlines()) == 2
