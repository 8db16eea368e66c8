"""Seeded random-graph generators.

Both generators are pure functions of their parameters and seed; nodes
are labelled ``"0" .. "n-1"`` in creation order.
"""

from __future__ import annotations

import numpy as np
import structlog

from cipnet.graphs.exceptions import InvalidGeneratorParameters
from cipnet.graphs.models import Graph

logger = structlog.get_logger(__name__)


def _graph_from_index_edges(n: int, edges: list[tuple[int, int]]) -> Graph:
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(
        labels=tuple(str(i) for i in range(n)),
        adjacency=tuple(frozenset(neighbors) for neighbors in adjacency),
    )


def generate_er(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi G(n, p): every unordered pair is an edge with probability p."""
    if n < 0:
        raise InvalidGeneratorParameters(f"n must be non-negative, got {n}.")
    if not 0.0 <= p <= 1.0:
        raise InvalidGeneratorParameters(f"p must lie in [0, 1], got {p}.")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    # random() draws from [0, 1): p=0 keeps nothing, p=1 keeps every pair.
    keep = rng.random(rows.size) < p
    graph = _graph_from_index_edges(
        n, list(zip(rows[keep].tolist(), cols[keep].tolist()))
    )
    logger.info("graph.generated", kind="er", n=n, p=p, seed=seed, m=graph.m)
    return graph


def generate_ba(n: int, m_attach: int, seed: int | None = None) -> Graph:
    """Barabasi-Albert preferential attachment.

    Growth starts from a clique on ``m_attach`` nodes.  The first new node
    joins every seed node; each later node picks ``m_attach`` distinct
    existing nodes with probability proportional to their current degree.
    The result has ``C(m_attach, 2) + m_attach * (n - m_attach)`` edges.
    """
    if not 1 <= m_attach < n:
        raise InvalidGeneratorParameters(
            f"Need 1 <= m_attach < n, got m_attach={m_attach}, n={n}."
        )
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(m_attach) for v in range(u + 1, m_attach)]
    degree = np.zeros(n, dtype=np.float64)
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1

    for new in range(m_attach, n):
        if new == m_attach:
            targets = np.arange(m_attach)
        else:
            weights = degree[:new] / degree[:new].sum()
            targets = rng.choice(new, size=m_attach, replace=False, p=weights)
        for target in sorted(targets.tolist()):
            edges.append((target, new))
            degree[target] += 1
            degree[new] += 1

    graph = _graph_from_index_edges(n, edges)
    logger.info(
        "graph.generated", kind="ba", n=n, m_attach=m_attach, seed=seed, m=graph.m
    )
    return graph
