"""Breadth-first traversal helpers: distances, connectivity, components."""

from __future__ import annotations

from collections import deque

import numpy as np
import structlog

from cipnet.graphs.exceptions import DisconnectedGraph, EmptyGraph
from cipnet.graphs.models import Graph

logger = structlog.get_logger(__name__)


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable nodes get ``-1``."""
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    """True iff a traversal from node 0 reaches every node."""
    if g.n == 0:
        raise EmptyGraph("Connectivity is undefined for a graph without nodes.")
    return bool(np.all(bfs_distances(g, 0) >= 0))


def require_connected(g: Graph, stage: str) -> None:
    if g.n == 0:
        raise EmptyGraph(f"{stage} needs at least one node.")
    if not is_connected(g):
        raise DisconnectedGraph(
            f"{stage} needs a connected graph; this graph has "
            f"{len(connected_components(g))} components.",
            stage=stage,
        )


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted index lists, ordered by their lowest index."""
    seen = np.zeros(g.n, dtype=bool)
    components: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        members = np.flatnonzero(bfs_distances(g, start) >= 0)
        seen[members] = True
        components.append(members.tolist())
    return components


def largest_component(g: Graph) -> Graph:
    """Subgraph induced by the largest component (ties: lowest index)."""
    components = connected_components(g)
    if not components:
        raise EmptyGraph("The graph has no nodes.")
    largest = max(components, key=len)
    if len(largest) < g.n:
        logger.info(
            "graph.largest_component_extracted",
            kept=len(largest),
            dropped=g.n - len(largest),
            components=len(components),
        )
    return g.subgraph(largest)
