"""Readers for the supported graph formats.

- Edge list: two whitespace-separated labels per line; ``#`` and ``%``
  start comment lines; blank lines are skipped.
- GraphML: undirected documents only, read through networkx; node ids
  become labels in document order.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import IO, Any, Union
from xml.etree.ElementTree import ParseError

import networkx as nx
import structlog

from cipnet.graphs.constants import COMMENT_PREFIXES
from cipnet.graphs.exceptions import (
    DirectedGraphML,
    DuplicateLabel,
    MalformedEdgeLine,
    MalformedGraphML,
    SelfLoop,
    UndecodableInput,
)
from cipnet.graphs.models import Graph, GraphBuilder

logger = structlog.get_logger(__name__)

TextSource = Union[str, IO[str]]


def parse_edge_list(text: TextSource) -> Graph:
    """Parse an edge list into a ``Graph``.

    Labels get internal indices in first-appearance order.  Duplicate
    lines and reversed duplicates collapse into one undirected edge.

    Raises:
        MalformedEdgeLine: a data line does not hold exactly two tokens.
        SelfLoop: a line names the same label twice.
        UndecodableInput: the stream holds bytes that are not UTF-8.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    builder = GraphBuilder()
    try:
        _read_edges(stream, builder)
    except UnicodeDecodeError as exc:
        raise UndecodableInput(
            f"Edge list is not valid UTF-8: {exc.reason} at byte {exc.start}."
        ) from exc
    graph = builder.build()
    logger.info("graph.parsed", format="edge-list", n=graph.n, m=graph.m)
    return graph


def _read_edges(stream: IO[str], builder: GraphBuilder) -> None:
    for line_number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedEdgeLine(line_number, line)
        try:
            builder.add_edge(tokens[0], tokens[1])
        except SelfLoop as exc:
            raise SelfLoop(
                f"Line {line_number}: self-loop on node {tokens[0]!r}.",
                line_number=line_number,
            ) from exc


def from_networkx(nx_graph: Any) -> Graph:
    """Adapt an undirected networkx graph; node order is preserved.

    Raises:
        DirectedGraphML: the graph is directed.
        SelfLoop: the graph carries a self-loop.
        DuplicateLabel: two nodes share the same string form.
    """
    if nx_graph.is_directed():
        raise DirectedGraphML("Directed graphs are not supported.")
    labels = [str(node) for node in nx_graph.nodes]
    if len(set(labels)) != len(labels):
        clashes = sorted({label for label in labels if labels.count(label) > 1})
        raise DuplicateLabel(
            f"Distinct nodes share the labels {clashes[:10]}.", labels=clashes[:10]
        )
    builder = GraphBuilder()
    for node in nx_graph.nodes:
        builder.add_node(str(node))
    for u, v in nx_graph.edges():
        builder.add_edge(str(u), str(v))
    return builder.build()


def read_graphml(source: Union[str, Path, IO[bytes]]) -> Graph:
    """Read an undirected GraphML document; parallel edges collapse.

    Raises:
        MalformedGraphML: the document is not valid GraphML.
        DirectedGraphML, SelfLoop: from ``from_networkx``.
    """
    try:
        nx_graph = nx.read_graphml(source)
    except nx.NetworkXError as exc:
        # networkx reports a directed edge in an undirected document this way.
        if "directed=true" in str(exc):
            raise DirectedGraphML(f"Directed edge in GraphML: {exc}") from exc
        raise MalformedGraphML(f"Cannot read GraphML: {exc}") from exc
    except (ParseError, ValueError, KeyError) as exc:
        raise MalformedGraphML(f"Cannot read GraphML: {exc}") from exc
    graph = from_networkx(nx_graph)
    logger.info("graph.parsed", format="graphml", n=graph.n, m=graph.m)
    return graph
