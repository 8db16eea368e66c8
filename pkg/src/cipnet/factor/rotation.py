"""Varimax rotation and axis orientation for two factors.

For two factors the varimax optimum has a closed form.  With rows
``(a, b)``, ``u = a^2 - b^2`` and ``v = 2ab``::

    4 phi = atan2(2 (sum uv - sum u sum v / n),
                  sum (u^2 - v^2) - ((sum u)^2 - (sum v)^2) / n)

and the loadings become ``L @ [[cos phi, -sin phi], [sin phi, cos phi]]``.
Orthogonal rotations preserve each node's communality; only the spread
of squared loadings across the two axes changes.
"""

from __future__ import annotations

import math

import numpy as np
import structlog

from cipnet.factor.exceptions import AmbiguousOrientation, InvalidLoadingStage
from cipnet.factor.models import LoadingsMatrix, LoadingStage

logger = structlog.get_logger(__name__)

ORIENTATION_TIE_TOL = 1e-12


def varimax_criterion(values: np.ndarray) -> float:
    """Sum over factors of the population variance of squared loadings."""
    return float(np.sum(np.var(np.asarray(values) ** 2, axis=0)))


def rotation_matrix(phi: float) -> np.ndarray:
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[c, -s], [s, c]])


def varimax_angle(values: np.ndarray, kaiser: bool = False) -> float:
    """Closed-form varimax angle for an n x 2 loadings matrix.

    With ``kaiser`` the rows are scaled to unit length first; zero rows
    are left untouched.
    """
    loadings = np.asarray(values, dtype=np.float64)
    if kaiser:
        norms = np.sqrt(np.sum(loadings**2, axis=1))
        norms[norms == 0.0] = 1.0
        loadings = loadings / norms[:, None]
    a, b = loadings[:, 0], loadings[:, 1]
    n = loadings.shape[0]
    u = a * a - b * b
    v = 2.0 * a * b
    numerator = 2.0 * (np.sum(u * v) - np.sum(u) * np.sum(v) / n)
    denominator = np.sum(u * u - v * v) - (np.sum(u) ** 2 - np.sum(v) ** 2) / n
    return 0.25 * math.atan2(numerator, denominator)


def varimax_rotate(loadings: LoadingsMatrix, kaiser: bool = False) -> LoadingsMatrix:
    """Rotate initial loadings to the varimax optimum.

    Raises:
        InvalidLoadingStage: ``loadings`` is not at the initial stage.
    """
    if loadings.stage is not LoadingStage.INITIAL:
        raise InvalidLoadingStage(
            f"varimax_rotate expects initial loadings, got {loadings.stage}."
        )
    phi = varimax_angle(loadings.values, kaiser=kaiser)
    rotation = rotation_matrix(phi)
    rotated = loadings.values @ rotation
    logger.debug(
        "factor.rotated",
        phi_deg=math.degrees(phi),
        kaiser=kaiser,
        criterion_before=varimax_criterion(loadings.values),
        criterion_after=varimax_criterion(rotated),
    )
    return LoadingsMatrix(
        labels=loadings.labels,
        values=rotated,
        stage=LoadingStage.ROTATED,
        rotation=loadings.rotation @ rotation,
    )


def pearson(x: np.ndarray, y: np.ndarray) -> float:
    """Pearson correlation; ``nan`` when either side has no variance."""
    xc = np.asarray(x, dtype=np.float64) - np.mean(x)
    yc = np.asarray(y, dtype=np.float64) - np.mean(y)
    denominator = math.sqrt(float(xc @ xc) * float(yc @ yc))
    if denominator == 0.0:
        return math.nan
    return float(xc @ yc) / denominator


def orient_axes(loadings: LoadingsMatrix, bwc: np.ndarray) -> LoadingsMatrix:
    """Canonicalize rotated axes as (peripheral, core).

    Each column's sign is flipped so its loadings sum to a non-negative
    value; the column that correlates more with betweenness becomes the
    core axis (column 1).

    Raises:
        InvalidLoadingStage: ``loadings`` is not at the rotated stage.
        AmbiguousOrientation: both columns correlate equally with BWC.
    """
    if loadings.stage is not LoadingStage.ROTATED:
        raise InvalidLoadingStage(
            f"orient_axes expects rotated loadings, got {loadings.stage}."
        )
    signs = np.where(loadings.values.sum(axis=0) < 0.0, -1.0, 1.0)
    signed = loadings.values * signs
    correlations = [pearson(signed[:, j], bwc) for j in range(2)]
    if any(math.isnan(r) for r in correlations) or (
        abs(correlations[0] - correlations[1]) < ORIENTATION_TIE_TOL
    ):
        raise AmbiguousOrientation(
            "Cannot tell the core axis apart: BWC correlations are "
            f"{correlations[0]!r} and {correlations[1]!r}."
        )
    permutation = np.eye(2) if correlations[1] > correlations[0] else np.eye(2)[::-1]
    oriented = signed @ permutation
    logger.debug(
        "factor.oriented",
        swapped=bool(permutation[0, 0] == 0.0),
        signs=signs.tolist(),
        bwc_correlations=correlations,
    )
    return LoadingsMatrix(
        labels=loadings.labels,
        values=oriented,
        stage=LoadingStage.ORIENTED,
        rotation=loadings.rotation @ np.diag(signs) @ permutation,
    )
