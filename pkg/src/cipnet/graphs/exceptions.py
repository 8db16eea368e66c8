"""Graph domain exceptions.

Raised while parsing, validating or measuring graphs.  Parsing stays
total for disconnected inputs; the stages that need finite distances
raise ``DisconnectedGraph`` themselves.
"""

from __future__ import annotations

from cipnet.shared.domain.errors import DomainViolation, InvalidInput, NotConverged


class MalformedEdgeLine(InvalidInput):
    """An edge-list line does not hold exactly two node labels."""

    code = "malformed_edge_line"

    def __init__(self, line_number: int, line: str) -> None:
        super().__init__(
            f"Line {line_number}: expected two node labels, got {line!r}.",
            line_number=line_number,
        )
        self.line_number = line_number


class SelfLoop(InvalidInput):
    """An edge joins a node to itself."""

    code = "self_loop"


class DuplicateLabel(InvalidInput):
    """Two nodes share the same external label."""

    code = "duplicate_label"


class AsymmetricAdjacency(InvalidInput):
    """A neighbor set is not mirrored by the opposite endpoint."""

    code = "asymmetric_adjacency"


class DirectedGraphML(InvalidInput):
    """A GraphML document declares directed edges."""

    code = "directed_graphml"


class MalformedGraphML(InvalidInput):
    """A GraphML document cannot be parsed."""

    code = "malformed_graphml"


class UndecodableInput(InvalidInput):
    """Input text is not valid UTF-8."""

    code = "undecodable_input"


class InvalidGeneratorParameters(InvalidInput):
    """Random-graph generator parameters are out of range."""

    code = "invalid_generator_parameters"


class EmptyGraph(DomainViolation):
    """The graph has no nodes or no edges where some are required."""

    code = "empty_graph"


class DisconnectedGraph(DomainViolation):
    """Shortest-path based measures need a connected graph."""

    code = "disconnected_graph"


class SpectralRadiusNotConverged(NotConverged):
    """Power iteration for the largest adjacency eigenvalue did not settle."""

    code = "spectral_radius_not_converged"
