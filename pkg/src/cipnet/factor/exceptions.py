"""Factor-analysis exceptions."""

from __future__ import annotations

from cipnet.shared.domain.errors import DomainViolation, InvalidInput, NotConverged


class DegenerateColumn(DomainViolation):
    """A node's four centrality values are all equal (zero variance)."""

    code = "degenerate_column"

    def __init__(self, node: str) -> None:
        super().__init__(
            f"Node {node!r} has zero variance across its centrality values.",
            node=node,
        )
        self.node = node


class NotSymmetric(InvalidInput):
    """The eigensolver was handed a non-symmetric matrix."""

    code = "not_symmetric"


class EigensolverNotConverged(NotConverged):
    """Cyclic Jacobi sweeps did not drive the off-diagonal mass to zero."""

    code = "eigensolver_not_converged"


class AmbiguousOrientation(DomainViolation):
    """Both rotated axes correlate equally with betweenness."""

    code = "ambiguous_orientation"


class DegenerateSecondFactor(DomainViolation):
    """The second eigenvalue vanished and the sole axis does not track BWC."""

    code = "degenerate_second_factor"


class InvalidLoadingStage(InvalidInput):
    """A loadings transformation received the wrong stage."""

    code = "invalid_loading_stage"


class UnknownSolver(InvalidInput):
    """The eigensolver name is not one of ``auto``, ``jacobi``, ``lapack``."""

    code = "unknown_solver"
