"""Graph aggregate.

An undirected simple graph over dense internal indices ``0..n-1`` with
stable external string labels.  Instances are immutable once built and
safe to share between threads.

- ``Graph``: the validated, frozen graph.
- ``GraphBuilder``: collects labels in first-appearance order and
  collapses duplicate or reversed edges before freezing a ``Graph``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from cipnet.graphs.exceptions import AsymmetricAdjacency, DuplicateLabel, SelfLoop


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    Invariants (checked on construction):
    - labels are unique and ``len(labels) == len(adjacency)``;
    - no node lists itself as a neighbor;
    - ``v in adjacency[u]`` iff ``u in adjacency[v]``.
    """

    labels: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.adjacency):
            raise AsymmetricAdjacency(
                f"{len(self.labels)} labels for {len(self.adjacency)} neighbor sets."
            )
        if len(set(self.labels)) != len(self.labels):
            raise DuplicateLabel("Node labels must be unique.")
        for u, neighbors in enumerate(self.adjacency):
            if u in neighbors:
                raise SelfLoop(f"Node {self.labels[u]!r} is its own neighbor.")
            for v in neighbors:
                if not 0 <= v < len(self.adjacency) or u not in self.adjacency[v]:
                    raise AsymmetricAdjacency(
                        f"Edge {self.labels[u]!r}-{v} is not mirrored."
                    )

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str]],
        labels: Sequence[str] = (),
    ) -> Graph:
        """Build a graph from label pairs; ``labels`` pre-seeds node order."""
        builder = GraphBuilder()
        for label in labels:
            builder.add_node(label)
        for u, v in edges:
            builder.add_edge(u, v)
        return builder.build()

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def m(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        return self._index[label]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degrees(self) -> np.ndarray:
        return np.fromiter(
            (len(neighbors) for neighbors in self.adjacency),
            dtype=np.int64,
            count=self.n,
        )

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u, neighbors in enumerate(self.adjacency):
            for v in sorted(neighbors):
                if u < v:
                    yield u, v

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0-1 adjacency matrix as float64."""
        matrix = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1.0
        return matrix

    def subgraph(self, nodes: Iterable[int]) -> Graph:
        """Induced subgraph; node order follows internal index order."""
        kept = sorted(set(nodes))
        position = {old: new for new, old in enumerate(kept)}
        return Graph(
            labels=tuple(self.labels[v] for v in kept),
            adjacency=tuple(
                frozenset(position[w] for w in self.adjacency[v] if w in position)
                for v in kept
            ),
        )


class GraphBuilder:
    """Mutable accumulator that freezes into a ``Graph``."""

    def __init__(self) -> None:
        self._index: dict[str, int] = {}
        self._labels: list[str] = []
        self._adjacency: list[set[int]] = []

    def add_node(self, label: str) -> int:
        index = self._index.get(label)
        if index is None:
            index = len(self._labels)
            self._index[label] = index
            self._labels.append(label)
            self._adjacency.append(set())
        return index

    def add_edge(self, u_label: str, v_label: str) -> None:
        if u_label == v_label:
            raise SelfLoop(f"Self-loop on node {u_label!r}.")
        u = self.add_node(u_label)
        v = self.add_node(v_label)
        self._adjacency[u].add(v)
        self._adjacency[v].add(u)

    def build(self) -> Graph:
        return Graph(
            labels=tuple(self._labels),
            adjacency=tuple(frozenset(neighbors) for neighbors in self._adjacency),
        )
