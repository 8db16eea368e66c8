"""Edge-list writer.

Lines are ordered so that re-parsing reproduces the label order of any
graph that came out of ``parse_edge_list``: every node is introduced
either next to an already written neighbor or as the first token of a
line whose second token is the next node in order.
"""

from __future__ import annotations

import structlog

from cipnet.graphs.models import Graph

logger = structlog.get_logger(__name__)


def serialize_edge_list(g: Graph) -> str:
    lines: list[str] = []
    introduced = [False] * g.n
    written: set[tuple[int, int]] = set()

    def emit(u: int, v: int) -> None:
        lines.append(f"{g.labels[u]} {g.labels[v]}")
        written.add((min(u, v), max(u, v)))
        introduced[u] = introduced[v] = True

    for u in range(g.n):
        if not introduced[u]:
            earlier = sorted(w for w in g.adjacency[u] if introduced[w])
            if earlier:
                emit(earlier[0], u)
            elif u + 1 in g.adjacency[u]:
                emit(u, u + 1)
            elif g.adjacency[u]:
                # Label order cannot be reproduced for this node.
                emit(u, min(g.adjacency[u]))
            else:
                logger.warning("graph.isolated_node_dropped", node=g.labels[u])
                continue
        for w in sorted(g.adjacency[u]):
            if introduced[w] and (min(u, w), max(u, w)) not in written:
                emit(w, u)

    # Edges towards nodes introduced out of order by the fallback above.
    for u, v in g.edges():
        if (u, v) not in written:
            emit(u, v)
    return "".join(f"{line}\n" for line in lines)
