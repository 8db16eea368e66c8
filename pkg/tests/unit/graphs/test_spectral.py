"""Unit tests for the spectral radius ratio."""

import networkx as nx
import numpy as np
import pytest

from cipnet.graphs import Graph, from_networkx, spectral_radius_ratio
from cipnet.graphs.exceptions import (
    DisconnectedGraph,
    EmptyGraph,
    SpectralRadiusNotConverged,
)
from cipnet.graphs.spectral import largest_adjacency_eigenvalue

pytestmark = pytest.mark.unit


class TestSpectralRadiusRatio:
    @pytest.mark.parametrize(
        "nx_graph", [nx.cycle_graph(5), nx.complete_graph(6), nx.petersen_graph()]
    )
    def test_regular_graphs_give_one(self, nx_graph):
        assert spectral_radius_ratio(from_networkx(nx_graph)) == pytest.approx(
            1.0, abs=1e-8
        )

    def test_example_graph_matches_dense_solver(self, example_graph):
        expected = np.linalg.eigvalsh(example_graph.adjacency_matrix()).max() / (
            2 * example_graph.m / example_graph.n
        )
        assert spectral_radius_ratio(example_graph) == pytest.approx(expected, abs=1e-6)

    def test_karate_club(self, karate_graph):
        assert spectral_radius_ratio(karate_graph) == pytest.approx(1.47, abs=0.01)

    def test_bipartite_graph_converges(self):
        star = from_networkx(nx.star_graph(4))
        assert largest_adjacency_eigenvalue(star) == pytest.approx(2.0, abs=1e-8)

    def test_irregular_graph_exceeds_one(self):
        assert spectral_radius_ratio(from_networkx(nx.path_graph(6))) > 1.0

    def test_edgeless_graph_rejected(self):
        with pytest.raises(EmptyGraph):
            spectral_radius_ratio(Graph.from_edges([], labels=["a", "b"]))

    def test_disconnected_graph_rejected(self):
        graph = Graph.from_edges([("a", "b"), ("c", "d")])
        with pytest.raises(DisconnectedGraph):
            spectral_radius_ratio(graph)

    def test_iteration_cap_raises(self, karate_graph):
        with pytest.raises(SpectralRadiusNotConverged) as excinfo:
            spectral_radius_ratio(karate_graph, max_iter=1)
        assert excinfo.value.exit_status == 4
