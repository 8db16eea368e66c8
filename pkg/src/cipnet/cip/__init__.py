from cipnet.cip.comparison import compare_with_kcore
from cipnet.cip.constants import (
    BIN_LABELS,
    CLASS_COLORS,
    REFERENCE_NETWORKS,
    CipClass,
    ReferenceNetwork,
)
from cipnet.cip.dtos import BinsFractionTuple, CipRecord, KCoreComparison, NetworkReport
from cipnet.cip.indexing import (
    bin_of,
    cip_index,
    classify_fractions,
    classify_node,
    is_quadrant_reflected,
)
from cipnet.cip.kcore import coreness, k_core
from cipnet.cip.services import AnalysisResult, CipAnalysisService, build_records
from cipnet.cip.summary import bins_fraction_tuple, classify_network, rank_nodes

__all__ = [
    "BIN_LABELS",
    "CLASS_COLORS",
    "REFERENCE_NETWORKS",
    "AnalysisResult",
    "BinsFractionTuple",
    "CipAnalysisService",
    "CipClass",
    "CipRecord",
    "KCoreComparison",
    "NetworkReport",
    "ReferenceNetwork",
    "bin_of",
    "bins_fraction_tuple",
    "build_records",
    "cip_index",
    "classify_fractions",
    "classify_network",
    "classify_node",
    "compare_with_kcore",
    "coreness",
    "is_quadrant_reflected",
    "k_core",
    "rank_nodes",
]
