"""Missing-link analysis between two maps of the same network.

Map B is the more complete one. Links in B but not in A are the missing
links; they are classified by B's degree ranking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import EmptyGraph, InvalidParams, NoMissingLinks
from .graph import Graph, prefix_size, rank_nodes
from .metrics import RankBinMatrix, bin_edges

DEFAULT_TOP = 0.05


@dataclass(frozen=True)
class MapDiffReport:
    common_nodes: int
    nodes_only_in_a: int
    nodes_only_in_b: int
    links_in_a: int
    links_in_b: int
    shared_links: int
    links_only_in_a: int
    missing_links: frozenset[tuple[int, int]]
    missing_bin_matrix: RankBinMatrix
    b_rank_of: Mapping[int, int]

    @property
    def n_b(self) -> int:
        return len(self.b_rank_of)

    @property
    def rich_rich_fraction(self) -> float:
        """Share of missing links inside B's top 5%; 0.0 if none are missing."""
        if not self.missing_links:
            return 0.0
        return rich_rich_fraction(self, DEFAULT_TOP)

    def to_dict(self, top_fractions: Iterable[float] = (DEFAULT_TOP,)) -> dict:
        fractions = {}
        for t in top_fractions:
            fractions[repr(float(t))] = rich_rich_fraction(self, t) if self.missing_links else 0.0
        return {
            "common_nodes": self.common_nodes,
            "nodes_only_in_a": self.nodes_only_in_a,
            "nodes_only_in_b": self.nodes_only_in_b,
            "links_in_a": self.links_in_a,
            "links_in_b": self.links_in_b,
            "shared_links": self.shared_links,
            "links_only_in_a": self.links_only_in_a,
            "missing_links": len(self.missing_links),
            "missing_fraction_of_b": len(self.missing_links) / self.links_in_b if self.links_in_b else 0.0,
            "rich_rich_fraction": fractions,
        }


def diff_maps(map_a: Graph, map_b: Graph) -> MapDiffReport:
    if map_a.n_nodes == 0 or map_b.n_nodes == 0:
        raise EmptyGraph("both maps must contain nodes")
    edges_a, edges_b = map_a.edge_set(), map_b.edge_set()
    missing = frozenset(edges_b - edges_a)
    nodes_a, nodes_b = set(map_a.nodes), set(map_b.nodes)
    rank_of = rank_nodes(map_b).rank_of
    bins = bin_edges(missing, rank_of, map_b.n_nodes)
    return MapDiffReport(
        common_nodes=len(nodes_a & nodes_b),
        nodes_only_in_a=len(nodes_a - nodes_b),
        nodes_only_in_b=len(nodes_b - nodes_a),
        links_in_a=len(edges_a),
        links_in_b=len(edges_b),
        shared_links=len(edges_a & edges_b),
        links_only_in_a=len(edges_a - edges_b),
        missing_links=missing,
        missing_bin_matrix=RankBinMatrix(tuple(map(tuple, bins))),
        b_rank_of=rank_of,
    )


def rich_rich_fraction(report: MapDiffReport, top_fraction: float) -> float:
    """Fraction of missing links with both ends in B's top ceil(top_fraction * N_B)."""
    if not 0 < top_fraction <= 1:
        raise InvalidParams(f"top_fraction must lie in (0, 1], got {top_fraction}")
    if not report.missing_links:
        raise NoMissingLinks("map B has no links absent from map A")
    cutoff = prefix_size(top_fraction, report.n_b)
    rank_of = report.b_rank_of
    inside = sum(1 for u, v in report.missing_links if rank_of[u] <= cutoff and rank_of[v] <= cutoff)
    return inside / len(report.missing_links)
