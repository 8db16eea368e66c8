"""Node-by-node correlation of the centrality table.

Each node column holds four samples (its DEG, EVC, BWC and CLC values);
the matrix entry ``C[i][j]`` is the Pearson correlation of columns i and j.
"""

from __future__ import annotations

import numpy as np
import structlog

from cipnet.centrality.models import CentralityTable
from cipnet.factor.exceptions import DegenerateColumn
from cipnet.factor.models import NodeCorrelationMatrix

logger = structlog.get_logger(__name__)


def node_correlation_matrix(table: CentralityTable) -> NodeCorrelationMatrix:
    """Raises:
    DegenerateColumn: a node column has zero variance.
    """
    samples = table.matrix
    flat = np.ptp(samples, axis=0) == 0
    if np.any(flat):
        raise DegenerateColumn(table.labels[int(np.argmax(flat))])

    values = np.corrcoef(samples, rowvar=False)
    values = np.clip((values + values.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(values, 1.0)
    logger.debug("factor.correlation_built", n=table.n)
    return NodeCorrelationMatrix(labels=table.labels, values=values)
