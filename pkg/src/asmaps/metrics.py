"""Structural metrics: rich-club curve, rank-binned link counts,
triangle/rectangle coefficients, summary statistics and a tail fit."""

from __future__ import annotations

import math
import statistics
from collections import Counter
from dataclasses import asdict, dataclass
from itertools import chain
from typing import Optional

from .errors import FitNotApplicable, InsufficientNodes
from .graph import DegreeRanking, Graph, rank_by_value, rank_nodes

N_BINS = 20
BIN_WIDTH = 1 / N_BINS


@dataclass(frozen=True)
class RichClubCurve:
    """phi at every prefix size m = 2..N of the degree ranking.

    ``links[i]`` is the number of edges inside the top ``i + 2`` nodes.
    """

    n_nodes: int
    links: tuple[int, ...]

    def phi(self, m: int) -> float:
        if not 2 <= m <= self.n_nodes:
            raise InsufficientNodes(f"prefix size {m} outside 2..{self.n_nodes}")
        return self.links[m - 2] / (m * (m - 1) / 2)

    @property
    def points(self) -> list[tuple[int, float, float]]:
        n = self.n_nodes
        return [(m, m / n, self.phi(m)) for m in range(2, n + 1)]

    def sampled(self, count: int) -> list[tuple[float, float]]:
        """``(r, phi)`` at up to ``count`` log-spaced prefix sizes, always
        including m=2 and m=N."""
        n = self.n_nodes
        if count <= 0 or count >= n - 1:
            sizes = range(2, n + 1)
        elif count == 1:
            sizes = [n]
        else:
            ratio = math.log(n / 2) / (count - 1)
            sizes = sorted({min(n, round(2 * math.exp(i * ratio))) for i in range(count)})
        return [(m / n, self.phi(m)) for m in sizes]


def rich_club_curve(graph: Graph, ranking: Optional[DegreeRanking] = None) -> RichClubCurve:
    n = graph.n_nodes
    if n < 2:
        raise InsufficientNodes(f"rich-club curve needs N >= 2, got {n}")
    rank_of = (ranking or rank_nodes(graph)).rank_of
    # an edge joins the club at the prefix where its lower-ranked end enters
    entering = [0] * (n + 1)
    for u, v in graph.edges():
        entering[max(rank_of[u], rank_of[v])] += 1
    links = []
    total = entering[1]
    for m in range(2, n + 1):
        total += entering[m]
        links.append(total)
    return RichClubCurve(n, tuple(links))


def rich_club_at(graph: Graph, r: float) -> float:
    """phi at prefix size floor(r * N)."""
    m = math.floor(r * graph.n_nodes + 1e-9)
    if m < 2:
        raise InsufficientNodes(f"r={r} selects {m} node(s); need at least 2")
    return rich_club_curve(graph).phi(m)


def rank_bin(position: int, n: int) -> int:
    """5%-wide bin index of 1-based rank ``position``; rank N clamps to 19."""
    return min(position * N_BINS // n, N_BINS - 1)


def bin_edges(edges, rank_of, n: int) -> list[list[int]]:
    bins = [[0] * N_BINS for _ in range(N_BINS)]
    for u, v in edges:
        i, j = rank_bin(rank_of[u], n), rank_bin(rank_of[v], n)
        if i > j:
            i, j = j, i
        bins[i][j] += 1
    return bins


@dataclass(frozen=True)
class RankBinMatrix:
    """Upper-triangular 20x20 edge counts between rank bins (row <= column)."""

    bins: tuple[tuple[int, ...], ...]
    bin_width: float = BIN_WIDTH

    def total(self) -> int:
        return sum(map(sum, self.bins))

    def rows(self):
        """Flattened ``(bin_i, bin_j, count)`` over all 400 cells."""
        return [(i, j, self.bins[i][j]) for i in range(N_BINS) for j in range(N_BINS)]


def link_rank_matrix(graph: Graph, ranking: Optional[DegreeRanking] = None) -> RankBinMatrix:
    if graph.n_nodes == 0:
        return RankBinMatrix(tuple((0,) * N_BINS for _ in range(N_BINS)))
    rank_of = (ranking or rank_nodes(graph)).rank_of
    bins = bin_edges(graph.edges(), rank_of, graph.n_nodes)
    return RankBinMatrix(tuple(map(tuple, bins)))


def triangle_coefficients(graph: Graph) -> dict[int, int]:
    """Kt per node: adjacent pairs among the node's neighbors."""
    adj = graph.adjacency
    kt = {}
    for v, nbrs in adj.items():
        # set & set iterates the smaller operand; every triangle is seen from both ends
        kt[v] = sum(len(nbrs & adj[u]) for u in nbrs) // 2
    return kt


def rectangle_coefficients(graph: Graph) -> dict[int, int]:
    """Kr per node: 4-cycles v-u-x-w-v, one per neighbor pair {u, w} and
    closing node x. Chords are allowed and x may be adjacent to v.

    With c(v, x) common neighbors between v and x != v, the node closes
    C(c, 2) rectangles through x.
    """
    adj = graph.adjacency
    kr = {}
    for v, nbrs in adj.items():
        paths = Counter(chain.from_iterable(adj[u] for u in nbrs))
        paths.pop(v, None)
        kr[v] = sum(c * (c - 1) // 2 for c in paths.values() if c > 1)
    return kr


@dataclass(frozen=True)
class CycleCoefficientTable:
    kt: dict[int, int]
    kr: dict[int, int]

    @property
    def kt_rank_order(self) -> list[int]:
        return rank_by_value(self.kt)

    @property
    def kr_rank_order(self) -> list[int]:
        return rank_by_value(self.kr)

    def kt_curve(self) -> list[tuple[int, int]]:
        """``(rank, Kt)`` pairs, rank 1 is the largest coefficient."""
        return [(i, self.kt[v]) for i, v in enumerate(self.kt_rank_order, 1)]

    def kr_curve(self) -> list[tuple[int, int]]:
        return [(i, self.kr[v]) for i, v in enumerate(self.kr_rank_order, 1)]


def cycle_coefficients(graph: Graph) -> CycleCoefficientTable:
    return CycleCoefficientTable(triangle_coefficients(graph), rectangle_coefficients(graph))


def fit_power_law_degrees(degrees) -> float:
    """gamma from a least-squares line through log CCDF vs log k.

    The CCDF P(K >= k) is evaluated at each distinct degree k >= 1; its
    slope is 1 - gamma.
    """
    counts = Counter(k for k in degrees if k >= 1)
    if len(counts) < 3:
        raise FitNotApplicable(f"need >= 3 distinct positive degrees, got {len(counts)}")
    total = sum(counts.values())
    xs, ys = [], []
    remaining = total
    for k in sorted(counts):
        xs.append(math.log(k))
        ys.append(math.log(remaining / total))
        remaining -= counts[k]
    slope, _ = statistics.linear_regression(xs, ys)
    return abs(slope) + 1


def fit_power_law(graph: Graph) -> float:
    return fit_power_law_degrees(len(n) for n in graph.adjacency.values())


@dataclass(frozen=True)
class TopologySummary:
    n_nodes: int
    n_links: int
    k_average: float
    k_max: int
    kt_max: int
    kt_average: float
    kr_max: int
    kr_average: float
    gamma_estimate: Optional[float] = None
    averaging: str = "all nodes"

    def to_dict(self) -> dict:
        return asdict(self)


def summarize(graph: Graph, with_gamma: bool = False) -> TopologySummary:
    n = graph.n_nodes
    if n == 0:
        raise InsufficientNodes("cannot summarize an empty graph")
    degrees = [len(nbrs) for nbrs in graph.adjacency.values()]
    kt = triangle_coefficients(graph)
    kr = rectangle_coefficients(graph)
    gamma = None
    if with_gamma and len({k for k in degrees if k >= 1}) >= 3:
        gamma = fit_power_law_degrees(degrees)
    return TopologySummary(
        n_nodes=n,
        n_links=graph.edge_count,
        k_average=2 * graph.edge_count / n,
        k_max=max(degrees),
        kt_max=max(kt.values()),
        kt_average=sum(kt.values()) / n,
        kr_max=max(kr.values()),
        kr_average=sum(kr.values()) / n,
        gamma_estimate=gamma,
    )
