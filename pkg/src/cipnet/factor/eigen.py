"""Symmetric eigensolvers.

``jacobi_eigh`` is a cyclic Jacobi decomposition: row-by-row sweeps of
plane rotations until the off-diagonal Frobenius norm falls below
``tol`` (relative to the matrix norm when that exceeds one).  Sweeps are
strictly sequential so the result is deterministic.

``top2_eigenpairs`` selects the two largest eigenpairs and fixes each
eigenvector's sign so its largest-magnitude entry is positive.
"""

from __future__ import annotations

import math

import numpy as np
import structlog

from cipnet.config import settings
from cipnet.factor.exceptions import (
    EigensolverNotConverged,
    NotSymmetric,
    UnknownSolver,
)
from cipnet.factor.models import NodeCorrelationMatrix

logger = structlog.get_logger(__name__)

SOLVERS: tuple[str, ...] = ("auto", "jacobi", "lapack")


def _off_diagonal_norm(a: np.ndarray) -> float:
    return math.sqrt(2.0 * float(np.sum(np.triu(a, k=1) ** 2)))


def jacobi_eigh(
    matrix: np.ndarray,
    tol: float = settings.JACOBI_TOL,
    max_sweeps: int = settings.JACOBI_MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and column eigenvectors of a symmetric matrix.

    Raises:
        NotSymmetric: ``matrix`` is not square and symmetric.
        EigensolverNotConverged: ``max_sweeps`` exhausted.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or not np.allclose(a, a.T):
        raise NotSymmetric(f"Expected a symmetric square matrix, got {a.shape}.")
    n = a.shape[0]
    v = np.eye(n)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    for sweep in range(max_sweeps + 1):
        if _off_diagonal_norm(a) < threshold:
            logger.debug("factor.jacobi_converged", sweeps=sweep, n=n)
            return np.diag(a).copy(), v
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    raise EigensolverNotConverged(
        f"Jacobi sweeps did not converge in {max_sweeps} sweeps.",
        max_sweeps=max_sweeps,
    )


def canonical_sign(vector: np.ndarray) -> np.ndarray:
    """Flip ``vector`` so that its largest-magnitude entry is positive."""
    pivot = int(np.argmax(np.abs(vector)))
    return -vector if vector[pivot] < 0 else vector


def resolve_solver(solver: str, n: int) -> str:
    if solver not in SOLVERS:
        raise UnknownSolver(f"Unknown eigensolver {solver!r}.", solver=solver)
    if solver == "auto":
        return "jacobi" if n <= settings.JACOBI_MAX_NODES else "lapack"
    return solver


def top2_eigenpairs(
    correlation: NodeCorrelationMatrix | np.ndarray,
    solver: str = settings.EIGEN_SOLVER,
) -> tuple[np.ndarray, np.ndarray]:
    """The two largest eigenvalues (descending) and their unit eigenvectors.

    Returns ``(eigenvalues, vectors)`` with ``vectors`` of shape (n, 2).
    """
    matrix = (
        correlation.values
        if isinstance(correlation, NodeCorrelationMatrix)
        else np.asarray(correlation, dtype=np.float64)
    )
    chosen = resolve_solver(solver, matrix.shape[0])
    if chosen == "jacobi":
        values, vectors = jacobi_eigh(matrix)
    else:
        if not np.allclose(matrix, matrix.T):
            raise NotSymmetric("Expected a symmetric matrix.")
        values, vectors = np.linalg.eigh(matrix)

    order = np.argsort(-values, kind="stable")[:2]
    top_vectors = np.column_stack(
        [canonical_sign(vectors[:, i] / np.linalg.norm(vectors[:, i])) for i in order]
    )
    logger.debug(
        "factor.top2_eigenpairs",
        solver=chosen,
        eigenvalues=[float(x) for x in values[order]],
    )
    return values[order].copy(), top_vectors
