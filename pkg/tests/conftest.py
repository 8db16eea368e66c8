import networkx as nx
import pytest

from cipnet.graphs import Graph, from_networkx, parse_edge_list

# Running example: two triangles-rich groups {1, 3, 5, 6, 9} and
# {2, 4, 7, 8, 10} bridged by the single edge 1-2.
EXAMPLE_EDGES = (
    "1 2\n1 3\n1 5\n1 6\n1 9\n3 5\n3 6\n5 6\n"
    "5 9\n2 7\n2 4\n7 4\n7 8\n7 10\n4 8\n8 10\n"
)
EXAMPLE_LABELS = ("1", "2", "3", "5", "6", "9", "7", "4", "8", "10")


@pytest.fixture()
def example_edge_text() -> str:
    return EXAMPLE_EDGES


@pytest.fixture()
def example_graph() -> Graph:
    return parse_edge_list(EXAMPLE_EDGES)


@pytest.fixture()
def karate_graph() -> Graph:
    return from_networkx(nx.karate_club_graph())


@pytest.fixture()
def path3() -> Graph:
    return parse_edge_list("a b\nb c\n")


@pytest.fixture()
def k4() -> Graph:
    return Graph.from_edges(
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
    )
