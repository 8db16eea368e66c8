"""Spectral radius ratio for node degree.

``lambda_sp = lambda_max(A) / mean degree`` measures degree variation
independently of graph size: it is 1 for regular graphs and grows with
degree skew.
"""

from __future__ import annotations

import numpy as np
import structlog

from cipnet.config import settings
from cipnet.graphs.exceptions import EmptyGraph, SpectralRadiusNotConverged
from cipnet.graphs.models import Graph
from cipnet.graphs.traversal import require_connected

logger = structlog.get_logger(__name__)


def largest_adjacency_eigenvalue(
    g: Graph,
    tol: float = settings.POWER_ITERATION_TOL,
    max_iter: int = settings.POWER_ITERATION_MAX_ITER,
) -> float:
    """Power iteration for ``lambda_max`` of the 0-1 adjacency matrix.

    Iterates on ``A + I`` (same Perron vector, spectrum shifted away from
    ``-lambda_max`` on bipartite graphs) from the all-ones vector with
    max-norm scaling, and stops when successive Rayleigh quotients of
    ``A`` differ by less than ``tol`` relative to the current estimate.

    Raises:
        SpectralRadiusNotConverged: ``max_iter`` exhausted.
    """
    adjacency = g.adjacency_matrix()
    shifted = adjacency + np.eye(g.n)
    x = np.ones(g.n)
    previous = float(x @ adjacency @ x) / float(x @ x)
    for iteration in range(1, max_iter + 1):
        x = shifted @ x
        x /= np.max(np.abs(x))
        current = float(x @ adjacency @ x) / float(x @ x)
        if abs(current - previous) < tol * max(1.0, abs(current)):
            logger.debug(
                "graph.spectral_radius_converged",
                iterations=iteration,
                value=current,
            )
            return current
        previous = current
    raise SpectralRadiusNotConverged(
        f"Power iteration did not converge in {max_iter} iterations.",
        max_iter=max_iter,
    )


def spectral_radius_ratio(
    g: Graph,
    tol: float = settings.POWER_ITERATION_TOL,
    max_iter: int = settings.POWER_ITERATION_MAX_ITER,
) -> float:
    """``lambda_max(A)`` divided by the average degree ``2m / n``.

    Raises:
        EmptyGraph: the graph has no edges.
        DisconnectedGraph: the graph is not connected.
        SpectralRadiusNotConverged: power iteration did not settle.
    """
    if g.n == 0 or g.m == 0:
        raise EmptyGraph("The spectral radius ratio needs at least one edge.")
    require_connected(g, stage="spectral_radius_ratio")
    lambda_max = largest_adjacency_eigenvalue(g, tol=tol, max_iter=max_iter)
    ratio = lambda_max / (2.0 * g.m / g.n)
    logger.info("graph.spectral_radius_ratio", lambda_max=lambda_max, ratio=ratio)
    return ratio
