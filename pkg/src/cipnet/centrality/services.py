"""Neighborhood and shortest-path centrality metrics.

- DEG: neighbor count.
- EVC: principal adjacency eigenvector, unit Euclidean norm.
- BWC: raw Brandes betweenness over unordered pairs, endpoints excluded.
- CLC: reciprocal of total farness, without the ``n - 1`` factor.

All functions are pure in the graph.  Brandes single-source passes can
be spread over a process pool; their results are always reduced in
source order so the output does not depend on the worker count.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Sequence

import numpy as np
import structlog

from cipnet.centrality.exceptions import EigenvectorNotConverged, TooFewNodes
from cipnet.centrality.models import CentralityTable
from cipnet.config import settings
from cipnet.graphs.models import Graph
from cipnet.graphs.traversal import bfs_distances, require_connected

logger = structlog.get_logger(__name__)


def degree_centrality(g: Graph) -> np.ndarray:
    return g.degrees()


def eigenvector_centrality(
    g: Graph,
    tol: float = settings.POWER_ITERATION_TOL,
    max_iter: int = settings.POWER_ITERATION_MAX_ITER,
) -> np.ndarray:
    """Perron vector of the adjacency matrix, positive and unit-norm.

    Power iteration runs on ``A + I`` so bipartite graphs do not
    oscillate; it stops once successive normalized iterates differ by
    less than ``tol`` in max-norm.

    Raises:
        DisconnectedGraph: the graph is not connected.
        EigenvectorNotConverged: ``max_iter`` exhausted.
    """
    require_connected(g, stage="eigenvector_centrality")
    shifted = g.adjacency_matrix() + np.eye(g.n)
    x = np.ones(g.n) / math.sqrt(g.n)
    for iteration in range(1, max_iter + 1):
        y = shifted @ x
        y /= np.linalg.norm(y)
        if np.max(np.abs(y - x)) < tol:
            logger.debug("centrality.evc_converged", iterations=iteration)
            return y
        x = y
    raise EigenvectorNotConverged(
        f"Eigenvector centrality did not converge in {max_iter} iterations.",
        max_iter=max_iter,
    )


def _source_dependencies(
    neighbors: Sequence[Sequence[int]], source: int
) -> np.ndarray:
    """Brandes dependency of ``source`` on every node (directed pass)."""
    n = len(neighbors)
    dist = [-1] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[source] = 0
    sigma[source] = 1
    order: list[int] = []
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in neighbors[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)

    delta = [0.0] * n
    for w in reversed(order):
        for v in preds[w]:
            delta[v] += (sigma[v] / sigma[w]) * (1.0 + delta[w])
    delta[source] = 0.0
    return np.asarray(delta, dtype=np.float64)


def betweenness_centrality(
    g: Graph, workers: int = settings.BETWEENNESS_WORKERS
) -> np.ndarray:
    """Raw betweenness over unordered pairs (directed accumulation halved).

    Raises:
        DisconnectedGraph: the graph is not connected.
    """
    require_connected(g, stage="betweenness_centrality")
    neighbors = [sorted(adj) for adj in g.adjacency]
    per_source = partial(_source_dependencies, neighbors)
    total = np.zeros(g.n, dtype=np.float64)
    if workers > 1 and g.n > 1:
        chunksize = max(1, g.n // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for delta in pool.map(per_source, range(g.n), chunksize=chunksize):
                total += delta
    else:
        for source in range(g.n):
            total += per_source(source)
    return total / 2.0


def closeness_centrality(g: Graph) -> np.ndarray:
    """``1 / sum of hop distances`` per node.

    Raises:
        DisconnectedGraph: the graph is not connected.
        TooFewNodes: a single node has no farness.
    """
    require_connected(g, stage="closeness_centrality")
    if g.n < 2:
        raise TooFewNodes("Closeness needs at least two nodes.")
    farness = np.array(
        [bfs_distances(g, v).sum() for v in range(g.n)], dtype=np.float64
    )
    return 1.0 / farness


def centrality_table(
    g: Graph,
    tol: float = settings.POWER_ITERATION_TOL,
    max_iter: int = settings.POWER_ITERATION_MAX_ITER,
    workers: int = settings.BETWEENNESS_WORKERS,
) -> CentralityTable:
    """Assemble DEG, EVC, BWC and CLC for every node.

    Raises:
        TooFewNodes: fewer than three nodes.
        DisconnectedGraph, EigenvectorNotConverged: from the metrics.
    """
    if g.n < 3:
        raise TooFewNodes(f"The centrality table needs n >= 3, got n={g.n}.")
    require_connected(g, stage="centrality_table")
    table = CentralityTable(
        labels=g.labels,
        deg=degree_centrality(g),
        evc=eigenvector_centrality(g, tol=tol, max_iter=max_iter),
        bwc=betweenness_centrality(g, workers=workers),
        clc=closeness_centrality(g),
    )
    logger.info("centrality.table_built", n=g.n, m=g.m, workers=workers)
    return table
