"""Centrality dataset.

``CentralityTable`` is the transpose of the per-node centrality dataset:
four rows (DEG, EVC, BWC, CLC) and one column per node.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

METRIC_ROWS: tuple[str, ...] = ("DEG", "EVC", "BWC", "CLC")


@dataclass(frozen=True, eq=False)
class CentralityTable:
    labels: tuple[str, ...]
    deg: np.ndarray
    evc: np.ndarray
    bwc: np.ndarray
    clc: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def matrix(self) -> np.ndarray:
        """The 4 x n matrix in fixed row order (DEG, EVC, BWC, CLC)."""
        return np.vstack(
            [self.deg.astype(np.float64), self.evc, self.bwc, self.clc]
        )

    def row(self, metric: str) -> np.ndarray:
        return self.matrix[METRIC_ROWS.index(metric)]
