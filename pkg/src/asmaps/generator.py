"""Barabasi-Albert growth and rich-club enrichment fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import InvalidParams
from .graph import Graph, prefix_size, rank_nodes


@dataclass(frozen=True)
class BaParams:
    n_final: int
    m_links: int
    m0: Optional[int] = None
    seed: int = 0

    @property
    def seed_size(self) -> int:
        return self.m_links + 1 if self.m0 is None else self.m0

    def validate(self) -> None:
        if self.m_links < 1:
            raise InvalidParams(f"m_links must be >= 1, got {self.m_links}")
        if self.m_links > self.seed_size:
            raise InvalidParams(f"m_links={self.m_links} exceeds seed clique size m0={self.seed_size}")
        if self.n_final < self.seed_size:
            raise InvalidParams(f"n_final={self.n_final} is smaller than m0={self.seed_size}")

    def expected_edges(self) -> int:
        m0 = self.seed_size
        return m0 * (m0 - 1) // 2 + self.m_links * (self.n_final - m0)


def generate_ba(params: BaParams) -> Graph:
    """Grow a preferential-attachment graph from a clique on ``m0`` nodes.

    Node labels are ``0 .. n_final-1`` in order of arrival. Each newcomer
    links to ``m_links`` distinct existing nodes drawn with probability
    proportional to degree; a repeated draw is rejected and redrawn.
    """
    params.validate()
    rng = random.Random(params.seed)
    m, m0 = params.m_links, params.seed_size
    edges = list(combinations(range(m0), 2))
    # every edge endpoint appears once, so a uniform pick is degree-proportional
    endpoints = [x for e in edges for x in e]
    for new in range(m0, params.n_final):
        targets: list[int] = []
        while len(targets) < m:
            if endpoints:
                t = endpoints[int(rng.random() * len(endpoints))]
            else:
                # single-node seed: no degree mass yet
                t = int(rng.random() * new)
            if t not in targets:
                targets.append(t)
        for t in targets:
            edges.append((t, new))
            endpoints.append(t)
            endpoints.append(new)
    return Graph(edges, nodes=range(params.n_final))


def _top_set(graph: Graph, top_fraction: float) -> tuple[int, ...]:
    if not 0 < top_fraction <= 1:
        raise InvalidParams(f"top_fraction must lie in (0, 1], got {top_fraction}")
    ranking = rank_nodes(graph)
    return ranking.top(prefix_size(top_fraction, graph.n_nodes))


def _absent_pairs(graph: Graph, club) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(sorted(club), 2) if not graph.has_edge(u, v)]


def enrich_club(graph: Graph, top_fraction: float, budget: int, seed=0) -> Graph:
    """Add ``budget`` random links among currently unlinked top-ranked pairs."""
    if budget < 0:
        raise InvalidParams("budget must be non-negative")
    absent = _absent_pairs(graph, _top_set(graph, top_fraction))
    if budget > len(absent):
        raise InvalidParams(f"budget {budget} exceeds {len(absent)} absent club pairs")
    if budget == 0:
        return graph
    rng = random.Random(seed)
    return graph.with_edges(rng.sample(absent, budget))


def rewire_into_club(graph: Graph, top_fraction: float, fraction: float, seed=0) -> Graph:
    """Move ``round(fraction * L)`` links into the top-ranked club.

    The moved links are drawn from edges not already inside the club and
    re-placed on absent club pairs, so N and L are unchanged.
    """
    club = set(_top_set(graph, top_fraction))
    k = round(fraction * graph.edge_count)
    absent = _absent_pairs(graph, club)
    outside = [e for e in graph.edges() if not (e[0] in club and e[1] in club)]
    if k > len(absent) or k > len(outside):
        raise InvalidParams(f"cannot rewire {k} links into a club of {len(club)} nodes")
    rng = random.Random(seed)
    dropped = set(rng.sample(outside, k))
    added = rng.sample(absent, k)
    kept = [e for e in graph.edges() if e not in dropped]
    return Graph(kept + added, nodes=graph.nodes)
