"""Centrality exceptions."""

from __future__ import annotations

from cipnet.shared.domain.errors import DomainViolation, NotConverged


class EigenvectorNotConverged(NotConverged):
    """Power iteration for eigenvector centrality did not settle."""

    code = "eigenvector_not_converged"


class TooFewNodes(DomainViolation):
    """The centrality table needs at least three nodes."""

    code = "too_few_nodes"
