"""CIP exceptions."""

from __future__ import annotations

from cipnet.shared.domain.errors import DomainViolation, InvalidInput


class ZeroLoadings(DomainViolation):
    """A node sits at the origin of the loadings plane; its angle is undefined."""

    code = "zero_loadings"


class InvalidAngle(InvalidInput):
    """An angle is not a finite number."""

    code = "invalid_angle"


class UnknownBin(InvalidInput):
    """A bin label outside the ten-degree scheme."""

    code = "unknown_bin"


class EmptyRecords(DomainViolation):
    """Network-level summaries need at least one node record."""

    code = "empty_records"


class NodeSetMismatch(InvalidInput):
    """A report and a graph describe different node sets."""

    code = "node_set_mismatch"
