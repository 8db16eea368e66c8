from cipnet.centrality.exporters import centrality_table_to_csv
from cipnet.centrality.models import METRIC_ROWS, CentralityTable
from cipnet.centrality.services import (
    betweenness_centrality,
    centrality_table,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
)

__all__ = [
    "METRIC_ROWS",
    "CentralityTable",
    "betweenness_centrality",
    "centrality_table",
    "centrality_table_to_csv",
    "closeness_centrality",
    "degree_centrality",
    "eigenvector_centrality",
]
