"""Immutable simple undirected graph, degree ranking and component sizes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import EmptyGraph, NodeNotFound


class Graph:
    """Simple undirected graph over opaque integer labels (AS numbers).

    Duplicate and reversed edges collapse, self-loops are dropped. Nodes
    named only in ``nodes`` (or only by a dropped self-loop) stay in the
    graph as isolated vertices.

    >>> g = Graph([(1, 2), (2, 1), (3, 3)])
    >>> sorted(g.nodes), g.edge_count
    ([1, 2, 3], 1)
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, edges: Iterable[tuple[int, int]] = (), nodes: Iterable[int] = ()):
        adj: dict[int, set[int]] = {v: set() for v in nodes}
        for u, v in edges:
            adj.setdefault(u, set())
            adj.setdefault(v, set())
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        self._edge_count = sum(len(n) for n in self._adj.values()) // 2

    @property
    def nodes(self):
        return self._adj.keys()

    @property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    @property
    def n_nodes(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise NodeNotFound(v) from None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield u, v

    def edge_set(self) -> set[tuple[int, int]]:
        return {(u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v}

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(list(self.edges()) + list(extra), nodes=self._adj)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(N={self.n_nodes}, L={self.edge_count})"


def degree(graph: Graph, v: int) -> int:
    return len(graph.neighbors(v))


@dataclass(frozen=True)
class DegreeRanking:
    """Nodes in decreasing degree order, ties by ascending label.

    ``rank_of`` maps a label to its 1-based position p; the normalized
    rank is ``p / N``.
    """

    ordered: tuple[int, ...]
    rank_of: Mapping[int, int]

    @property
    def n(self) -> int:
        return len(self.ordered)

    def normalized_rank(self, v: int) -> float:
        return self.rank_of[v] / len(self.ordered)

    def top(self, m: int) -> tuple[int, ...]:
        return self.ordered[:m]


def rank_by_value(values: Mapping[int, int]) -> list[int]:
    """Labels sorted by value descending, then label ascending."""
    return sorted(values, key=lambda v: (-values[v], v))


def rank_nodes(graph: Graph) -> DegreeRanking:
    if graph.n_nodes == 0:
        raise EmptyGraph("cannot rank an empty graph")
    adj = graph.adjacency
    ordered = tuple(sorted(adj, key=lambda v: (-len(adj[v]), v)))
    return DegreeRanking(ordered, {v: i for i, v in enumerate(ordered, 1)})


class UnionFind:
    """Disjoint sets with union by size and path halving; tracks the largest set."""

    def __init__(self):
        self.parent: dict[int, int] = {}
        self.size: dict[int, int] = {}
        self.largest = 0

    def add(self, x: int) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1
            self.largest = max(self.largest, 1)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size.pop(rb)
        if self.size[ra] > self.largest:
            self.largest = self.size[ra]


def largest_component_size(graph: Graph, removed: Iterable[int] = ()) -> int:
    """Size of the largest connected component once ``removed`` is deleted."""
    removed = set(removed)
    adj = graph.adjacency
    uf = UnionFind()
    for v, nbrs in adj.items():
        if v in removed:
            continue
        uf.add(v)
        for u in nbrs:
            if u in uf.parent and u not in removed:
                uf.union(u, v)
    return uf.largest


def prefix_size(fraction: float, n: int) -> int:
    """ceil(fraction * n), immune to float noise such as 0.07 * 100."""
    return math.ceil(round(fraction * n, 9))
