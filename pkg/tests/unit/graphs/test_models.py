"""Unit tests for the Graph aggregate and its builder."""

import numpy as np
import pytest

from cipnet.graphs import Graph, GraphBuilder
from cipnet.graphs.exceptions import AsymmetricAdjacency, DuplicateLabel, SelfLoop

pytestmark = pytest.mark.unit


class TestGraphInvariants:
    def test_rejects_self_loop(self):
        with pytest.raises(SelfLoop):
            Graph(labels=("a",), adjacency=(frozenset({0}),))

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(AsymmetricAdjacency):
            Graph(labels=("a", "b"), adjacency=(frozenset({1}), frozenset()))

    def test_rejects_out_of_range_neighbor(self):
        with pytest.raises(AsymmetricAdjacency):
            Graph(labels=("a",), adjacency=(frozenset({3}),))

    def test_rejects_duplicate_labels(self):
        with pytest.raises(DuplicateLabel):
            Graph(labels=("a", "a"), adjacency=(frozenset({1}), frozenset({0})))

    def test_edge_count_is_half_the_degree_sum(self, example_graph):
        assert example_graph.m == 16
        assert int(example_graph.degrees().sum()) == 2 * example_graph.m


class TestGraphQueries:
    def test_edges_are_listed_once_in_order(self, path3):
        assert list(path3.edges()) == [(0, 1), (1, 2)]

    def test_adjacency_matrix_is_symmetric_zero_one(self, example_graph):
        matrix = example_graph.adjacency_matrix()
        assert np.array_equal(matrix, matrix.T)
        assert set(np.unique(matrix)) == {0.0, 1.0}
        assert np.trace(matrix) == 0.0

    def test_subgraph_keeps_label_order_and_induced_edges(self, example_graph):
        keep = [example_graph.index_of(label) for label in ("5", "1", "3")]
        sub = example_graph.subgraph(keep)
        assert sub.labels == ("1", "3", "5")
        assert sub.m == 3

    def test_index_of_maps_labels(self, example_graph):
        assert example_graph.labels[example_graph.index_of("7")] == "7"


class TestGraphBuilder:
    def test_collapses_reversed_duplicates(self):
        builder = GraphBuilder()
        builder.add_edge("x", "y")
        builder.add_edge("y", "x")
        graph = builder.build()
        assert (graph.n, graph.m) == (2, 1)

    def test_add_node_is_idempotent(self):
        builder = GraphBuilder()
        assert builder.add_node("x") == builder.add_node("x") == 0

    def test_self_loop_edge_rejected(self):
        with pytest.raises(SelfLoop):
            GraphBuilder().add_edge("x", "x")

    def test_from_edges_pre_seeds_isolated_labels(self):
        graph = Graph.from_edges([("b", "c")], labels=["a"])
        assert graph.labels == ("a", "b", "c")
        assert graph.neighbors(0) == frozenset()
