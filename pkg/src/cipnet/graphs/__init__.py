from cipnet.graphs.generators import generate_ba, generate_er
from cipnet.graphs.models import Graph, GraphBuilder
from cipnet.graphs.parsers import from_networkx, parse_edge_list, read_graphml
from cipnet.graphs.serializers import serialize_edge_list
from cipnet.graphs.spectral import spectral_radius_ratio
from cipnet.graphs.traversal import is_connected, largest_component

__all__ = [
    "Graph",
    "GraphBuilder",
    "from_networkx",
    "generate_ba",
    "generate_er",
    "is_connected",
    "largest_component",
    "parse_edge_list",
    "read_graphml",
    "serialize_edge_list",
    "spectral_radius_ratio",
]
