"""Factor-analysis value objects.

- ``NodeCorrelationMatrix``: Pearson correlations between node columns.
- ``LoadingsMatrix``: n x 2 node loadings at one pipeline stage, together
  with the 2 x 2 orthogonal matrix that maps the initial loadings onto it.
- ``FactorSolution``: every stage of one extraction, kept for audits.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np


class LoadingStage(StrEnum):
    INITIAL = "initial"
    ROTATED = "rotated"
    ORIENTED = "oriented"


@dataclass(frozen=True, eq=False)
class NodeCorrelationMatrix:
    labels: tuple[str, ...]
    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True, eq=False)
class LoadingsMatrix:
    """Column 0 is the peripheral axis and column 1 the core axis once
    the stage is ``ORIENTED``; before that the columns are unlabelled."""

    labels: tuple[str, ...]
    values: np.ndarray
    stage: LoadingStage
    rotation: np.ndarray

    @classmethod
    def initial(cls, labels: tuple[str, ...], values: np.ndarray) -> LoadingsMatrix:
        return cls(
            labels=labels,
            values=np.asarray(values, dtype=np.float64),
            stage=LoadingStage.INITIAL,
            rotation=np.eye(2),
        )

    @property
    def communalities(self) -> np.ndarray:
        return np.sum(self.values**2, axis=1)

    @property
    def peripheral(self) -> np.ndarray:
        return self.values[:, 0]

    @property
    def core(self) -> np.ndarray:
        return self.values[:, 1]


@dataclass(frozen=True, eq=False)
class FactorSolution:
    correlation: NodeCorrelationMatrix
    eigenvalues: np.ndarray
    initial: LoadingsMatrix
    rotated: LoadingsMatrix
    oriented: LoadingsMatrix
    kaiser: bool
    solver: str
    single_factor: bool = False

    @property
    def explained_fraction(self) -> float:
        """Share of the correlation trace carried by the two factors."""
        return float(self.eigenvalues.sum() / np.trace(self.correlation.values))
