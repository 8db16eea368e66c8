from cipnet.factor.correlation import node_correlation_matrix
from cipnet.factor.eigen import jacobi_eigh, top2_eigenpairs
from cipnet.factor.exporters import factor_audit_csv
from cipnet.factor.models import (
    FactorSolution,
    LoadingsMatrix,
    LoadingStage,
    NodeCorrelationMatrix,
)
from cipnet.factor.rotation import orient_axes, varimax_criterion, varimax_rotate
from cipnet.factor.services import extract_factors

__all__ = [
    "FactorSolution",
    "LoadingStage",
    "LoadingsMatrix",
    "NodeCorrelationMatrix",
    "extract_factors",
    "factor_audit_csv",
    "jacobi_eigh",
    "node_correlation_matrix",
    "orient_axes",
    "top2_eigenpairs",
    "varimax_criterion",
    "varimax_rotate",
]
