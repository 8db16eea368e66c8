import numpy as np
import pytest

from cipnet.centrality import CentralityTable, centrality_table


@pytest.fixture()
def example_table(example_graph) -> CentralityTable:
    return centrality_table(example_graph)


@pytest.fixture()
def collinear_table() -> CentralityTable:
    """Three nodes whose columns are exact affine images of one another."""
    return CentralityTable(
        labels=("a", "c", "d"),
        deg=np.array([1.0, 2.0, 0.0]),
        evc=np.array([2.0, 4.0, -1.0]),
        bwc=np.array([3.0, 6.0, -2.0]),
        clc=np.array([4.0, 8.0, -3.0]),
    )
