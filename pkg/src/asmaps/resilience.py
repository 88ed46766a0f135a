"""Node-removal percolation: degree-targeted attack and random error.

S is the largest surviving cluster divided by the intact node count N.
Each trace fixes the full removal order first, then replays it backwards,
re-inserting nodes into a union-find so every prefix is evaluated in one
pass.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InvalidParams
from .graph import Graph, UnionFind, rank_nodes

DEFAULT_POINTS = 200


@dataclass(frozen=True)
class RemovalTrace:
    mode: str
    points: list[tuple[float, float]] = field(default_factory=list)
    seed: Optional[int] = None
    recompute_degrees: bool = False
    trials: int = 1

    def rows(self):
        seed = "" if self.seed is None else self.seed
        return [(f, s, self.mode, seed) for f, s in self.points]


def _checkpoints(n: int, f_max: float, step: Optional[int]) -> list[int]:
    if not 0 < f_max <= 1:
        raise InvalidParams(f"f_max must lie in (0, 1], got {f_max}")
    last = min(n, math.floor(f_max * n + 1e-9))
    if step is None:
        step = max(1, last // DEFAULT_POINTS)
    if step < 1:
        raise InvalidParams(f"step must be >= 1, got {step}")
    ks = list(range(0, last + 1, step))
    if ks[-1] != last:
        ks.append(last)
    return ks


def largest_after_removals(graph: Graph, order: Sequence[int]) -> list[int]:
    """``out[k]`` = largest component size after removing ``order[:k]``.

    ``order`` may cover only part of the graph; nodes outside it are never
    removed.
    """
    adj = graph.adjacency
    doomed = set(order)
    uf = UnionFind()
    for v in adj:
        if v not in doomed:
            uf.add(v)
    for v in adj:
        if v not in doomed:
            for u in adj[v]:
                if u not in doomed:
                    uf.union(u, v)
    out = [0] * (len(order) + 1)
    out[len(order)] = uf.largest
    for k in range(len(order) - 1, -1, -1):
        v = order[k]
        uf.add(v)
        for u in adj[v]:
            if u in uf.parent:
                uf.union(u, v)
        out[k] = uf.largest
    return out


def adaptive_attack_order(graph: Graph, count: int) -> list[int]:
    """Repeatedly remove the current highest-degree node (ties: lowest label)."""
    adj = graph.adjacency
    deg = {v: len(n) for v, n in adj.items()}
    heap = [(-d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed: set[int] = set()
    order = []
    while len(order) < count:
        d, v = heapq.heappop(heap)
        if v in removed or -d != deg[v]:
            continue
        order.append(v)
        removed.add(v)
        for u in adj[v]:
            if u not in removed:
                deg[u] -= 1
                heapq.heappush(heap, (-deg[u], u))
    return order


def attack_trace(graph: Graph, f_max: float = 0.1, step: Optional[int] = None,
                 recompute_degrees: bool = False) -> RemovalTrace:
    """Remove nodes by decreasing degree and record S every ``step`` removals.

    By default the order is the initial degree ranking; with
    ``recompute_degrees`` the survivors are re-ranked after each removal.
    """
    n = graph.n_nodes
    ks = _checkpoints(n, f_max, step)
    if recompute_degrees:
        order = adaptive_attack_order(graph, ks[-1])
    else:
        order = list(rank_nodes(graph).top(ks[-1]))
    sizes = largest_after_removals(graph, order)
    return RemovalTrace("attack", [(k / n, sizes[k] / n) for k in ks],
                        recompute_degrees=recompute_degrees)


def error_trace(graph: Graph, f_max: float = 0.1, step: Optional[int] = None,
                seed: int = 0, trials: int = 1) -> RemovalTrace:
    """Remove nodes in uniformly random order, averaging S over ``trials``.

    Each trial shuffles with its own generator seeded from a stream drawn
    off the master ``seed``.
    """
    if trials < 1:
        raise InvalidParams(f"trials must be >= 1, got {trials}")
    n = graph.n_nodes
    ks = _checkpoints(n, f_max, step)
    totals = [0] * len(ks)
    for order in _shuffled_orders(graph, seed, trials):
        sizes = largest_after_removals(graph, order[: ks[-1]])
        for i, k in enumerate(ks):
            totals[i] += sizes[k]
    return RemovalTrace("error", [(k / n, t / (trials * n)) for k, t in zip(ks, totals)],
                        seed=seed, trials=trials)


def _shuffled_orders(graph: Graph, seed: int, trials: int):
    master = random.Random(seed)
    nodes = sorted(graph.nodes)
    for _ in range(trials):
        rng = random.Random(master.getrandbits(64))
        order = nodes[:]
        rng.shuffle(order)
        yield order


def error_permutation(graph: Graph, seed: int, trial: int = 0) -> list[int]:
    """The removal order ``error_trace`` uses for trial ``trial``."""
    for i, order in enumerate(_shuffled_orders(graph, seed, trial + 1)):
        if i == trial:
            return order
