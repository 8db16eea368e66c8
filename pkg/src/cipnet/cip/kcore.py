"""K-core decomposition and coreness.

``k_core`` uses the bucket-based peeling of Batagelj and Zaversnik:
nodes are kept sorted by current degree in a flat array, and removing
the lowest-degree node moves each higher-degree neighbour one bucket
down in O(1).  Runs in O(n + m).
"""

from __future__ import annotations

import numpy as np

from cipnet.graphs.models import Graph


def k_core(g: Graph) -> np.ndarray:
    """Core number of every node, as an int64 vector in node order."""
    n = g.n
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    degree = [len(g.neighbors(v)) for v in range(n)]
    max_degree = max(degree)

    # bucket_start[d]: first position of degree-d nodes in ``order``.
    bucket_start = [0] * (max_degree + 1)
    for d in degree:
        bucket_start[d] += 1
    start = 0
    for d in range(max_degree + 1):
        count = bucket_start[d]
        bucket_start[d] = start
        start += count

    position = [0] * n
    order = [0] * n
    for v in range(n):
        position[v] = bucket_start[degree[v]]
        order[position[v]] = v
        bucket_start[degree[v]] += 1
    for d in range(max_degree, 0, -1):
        bucket_start[d] = bucket_start[d - 1]
    bucket_start[0] = 0

    for i in range(n):
        v = order[i]
        for u in sorted(g.neighbors(v)):
            if degree[u] > degree[v]:
                du = degree[u]
                pu = position[u]
                pw = bucket_start[du]
                w = order[pw]
                if u != w:
                    position[u], position[w] = pw, pu
                    order[pu], order[pw] = w, u
                bucket_start[du] += 1
                degree[u] -= 1
    return np.asarray(degree, dtype=np.int64)


def coreness(g: Graph, core_numbers: np.ndarray | None = None) -> np.ndarray:
    """Sum of the neighbours' core numbers, per node."""
    cores = k_core(g) if core_numbers is None else core_numbers
    return np.asarray(
        [sum(int(cores[u]) for u in g.neighbors(v)) for v in range(g.n)],
        dtype=np.int64,
    )
