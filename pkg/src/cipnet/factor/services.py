"""Two-factor extraction from a centrality table.

Steps:
1. Pearson correlation between node columns.
2. Two largest eigenpairs; the raw eigenvector entries are the initial
   loadings (no square-root-of-eigenvalue scaling).
3. Closed-form varimax rotation, optionally Kaiser-normalized.
4. Orientation as (peripheral, core) using betweenness.

When the second eigenvalue vanishes the two-factor hypothesis collapses.
The sole axis, signed so its loadings sum to a non-negative value, is
accepted as the core axis only if its loadings correlate positively
with BWC; every node then sits at 90 degrees.
"""

from __future__ import annotations

import math

import numpy as np
import structlog

from cipnet.centrality.models import CentralityTable
from cipnet.config import settings
from cipnet.factor.correlation import node_correlation_matrix
from cipnet.factor.eigen import resolve_solver, top2_eigenpairs
from cipnet.factor.exceptions import DegenerateSecondFactor
from cipnet.factor.models import (
    FactorSolution,
    LoadingsMatrix,
    LoadingStage,
    NodeCorrelationMatrix,
)
from cipnet.factor.rotation import orient_axes, pearson, varimax_rotate

logger = structlog.get_logger(__name__)

DEGENERATE_EIGENVALUE_TOL = 1e-12


def extract_factors(
    table: CentralityTable,
    kaiser: bool = settings.KAISER_NORMALIZATION,
    solver: str = settings.EIGEN_SOLVER,
) -> FactorSolution:
    """Raises:
    DegenerateColumn: from the correlation step.
    EigensolverNotConverged: from the eigensolver.
    AmbiguousOrientation: the core axis cannot be identified.
    DegenerateSecondFactor: single factor not aligned with BWC.
    """
    log = logger.bind(n=table.n, kaiser=kaiser)
    correlation = node_correlation_matrix(table)
    chosen = resolve_solver(solver, table.n)
    eigenvalues, vectors = top2_eigenpairs(correlation, solver=chosen)
    initial = LoadingsMatrix.initial(table.labels, vectors)

    if abs(eigenvalues[1]) <= DEGENERATE_EIGENVALUE_TOL * max(1.0, eigenvalues[0]):
        return _single_factor_solution(
            table, correlation, eigenvalues, initial, kaiser, chosen
        )

    rotated = varimax_rotate(initial, kaiser=kaiser)
    oriented = orient_axes(rotated, table.bwc)
    log.info(
        "factor.extracted",
        solver=chosen,
        eigenvalues=[float(x) for x in eigenvalues],
    )
    return FactorSolution(
        correlation=correlation,
        eigenvalues=eigenvalues,
        initial=initial,
        rotated=rotated,
        oriented=oriented,
        kaiser=kaiser,
        solver=chosen,
    )


def _single_factor_solution(
    table: CentralityTable,
    correlation: NodeCorrelationMatrix,
    eigenvalues: np.ndarray,
    initial: LoadingsMatrix,
    kaiser: bool,
    solver: str,
) -> FactorSolution:
    sole_axis = initial.values[:, 0]
    if sole_axis.sum() < 0.0:
        sole_axis = -sole_axis
    r = pearson(sole_axis, table.bwc)
    if math.isnan(r) or r <= 0.0:
        raise DegenerateSecondFactor(
            "Second eigenvalue vanished and the remaining axis does not "
            f"correlate with BWC (r={r!r}).",
            second_eigenvalue=float(eigenvalues[1]),
        )
    logger.warning(
        "factor.single_factor",
        second_eigenvalue=float(eigenvalues[1]),
        bwc_correlation=r,
    )
    swap = np.eye(2)[::-1]
    rotated = LoadingsMatrix(
        labels=initial.labels,
        values=initial.values.copy(),
        stage=LoadingStage.ROTATED,
        rotation=np.eye(2),
    )
    oriented = LoadingsMatrix(
        labels=initial.labels,
        values=np.column_stack([np.zeros(table.n), np.abs(sole_axis)]),
        stage=LoadingStage.ORIENTED,
        rotation=swap,
    )
    return FactorSolution(
        correlation=correlation,
        eigenvalues=eigenvalues,
        initial=initial,
        rotated=rotated,
        oriented=oriented,
        kaiser=kaiser,
        solver=solver,
        single_factor=True,
    )
