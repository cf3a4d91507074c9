"""Brute-force ground truth for every classical definition.

These implementations are deliberately naive: direct enumeration of labelings,
subsets and orderings straight from the definitions, sharing nothing with the
spectral machinery beyond the plain graph type.  Enumeration orders are
lexicographic (edges sorted, labels ascending, permutations in standard
order), so any failure is reproducible.  Every returned witness is re-checked
against its definition before it leaves this module.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Mapping

from .errors import PreconditionError
from .graphs import SimpleGraph
from .limits import DEFAULT_LIMITS, Limits

__all__ = [
    "OracleResult",
    "antimagic_oracle",
    "strength_oracle",
    "chi_sigma_oracle",
    "domination_oracle",
    "edge_roman_oracle",
    "hamiltonian_oracle",
]


@dataclass
class OracleResult:
    value: bool | int | None
    witness: object = None
    enumerated: int = 0


def _adjacency(g: SimpleGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n + 1)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _weighted_degrees(g: SimpleGraph, labels: Mapping[tuple[int, int], int]) -> list[int]:
    sums = [0] * (g.n + 1)
    for (u, v), value in labels.items():
        sums[u] += value
        sums[v] += value
    return sums[1:]


def _check_no_isolated(g: SimpleGraph) -> None:
    covered = {v for e in g.edges for v in e}
    if len(covered) < g.n:
        raise PreconditionError("oracle needs a graph without isolated vertices")


def antimagic_oracle(g: SimpleGraph, limits: Limits = DEFAULT_LIMITS) -> OracleResult:
    """Exhaust all |E|! bijective labelings 1..|E| looking for distinct
    weighted degrees."""
    _check_no_isolated(g)
    edges = g.sorted_edges()
    m = len(edges)
    limits.check_steps(math.factorial(m), "antimagic oracle")
    enumerated = 0
    for perm in permutations(range(1, m + 1)):
        enumerated += 1
        labels = dict(zip(edges, perm))
        degrees = _weighted_degrees(g, labels)
        if len(set(degrees)) == g.n:
            assert len(set(labels.values())) == m  # bijectivity self-check
            return OracleResult(True, labels, enumerated)
    return OracleResult(False, None, enumerated)


def strength_oracle(
    g: SimpleGraph, k_max: int, limits: Limits = DEFAULT_LIMITS
) -> OracleResult:
    """Smallest k <= k_max admitting an irregular labeling E -> {1..k};
    value None when no such k exists in range."""
    _check_no_isolated(g)
    edges = g.sorted_edges()
    m = len(edges)
    enumerated = 0
    for k in range(1, k_max + 1):
        limits.check_steps(k**m, f"strength oracle at k={k}")
        for combo in product(range(1, k + 1), repeat=m):
            enumerated += 1
            labels = dict(zip(edges, combo))
            degrees = _weighted_degrees(g, labels)
            if len(set(degrees)) == g.n:
                assert max(combo) <= k
                return OracleResult(k, labels, enumerated)
    return OracleResult(None, None, enumerated)


def chi_sigma_oracle(
    g: SimpleGraph, k: int, limits: Limits = DEFAULT_LIMITS
) -> OracleResult:
    """Is there a labeling E -> {1..k} giving adjacent vertices distinct
    weighted degrees?"""
    orders = _component_orders(g)
    if orders and orders[0] < 3:
        raise PreconditionError("oracle needs no component of order < 3")
    edges = g.sorted_edges()
    m = len(edges)
    limits.check_steps(k**m, "vertex-coloring labeling oracle")
    enumerated = 0
    for combo in product(range(1, k + 1), repeat=m):
        enumerated += 1
        labels = dict(zip(edges, combo))
        degrees = _weighted_degrees(g, labels)
        if all(degrees[u - 1] != degrees[v - 1] for u, v in edges):
            return OracleResult(True, labels, enumerated)
    return OracleResult(False, None, enumerated)


def domination_oracle(
    g: SimpleGraph, k: int, limits: Limits = DEFAULT_LIMITS
) -> OracleResult:
    """Does some k-subset of vertices dominate the graph?"""
    if not 1 <= k <= g.n:
        raise PreconditionError(f"k must be in 1..{g.n}, got {k}")
    adj = _adjacency(g)
    limits.check_steps(math.comb(g.n, k), "domination oracle")
    enumerated = 0
    for subset in combinations(range(1, g.n + 1), k):
        enumerated += 1
        chosen = set(subset)
        if all(v in chosen or adj[v] & chosen for v in range(1, g.n + 1)):
            return OracleResult(True, frozenset(subset), enumerated)
    return OracleResult(False, None, enumerated)


def edge_roman_oracle(g: SimpleGraph, limits: Limits = DEFAULT_LIMITS) -> OracleResult:
    """Minimum weight of an edge function E -> {0,1,2} in which every 0-edge
    touches a 2-edge, by full enumeration of 3^|E| functions."""
    edges = g.sorted_edges()
    m = len(edges)
    if m < 1:
        raise PreconditionError("edge Roman domination needs at least one edge")
    limits.check_steps(3**m, "edge Roman oracle")
    adjacent = [
        [j for j in range(m) if j != i and set(edges[i]) & set(edges[j])]
        for i in range(m)
    ]
    best: int | None = None
    best_fn = None
    enumerated = 0
    for combo in product((0, 1, 2), repeat=m):
        enumerated += 1
        if best is not None and sum(combo) >= best:
            continue
        ok = all(
            value != 0 or any(combo[j] == 2 for j in adjacent[i])
            for i, value in enumerate(combo)
        )
        if ok:
            best = sum(combo)
            best_fn = dict(zip(edges, combo))
    assert best is not None  # labeling everything 1 is always valid
    return OracleResult(best, best_fn, enumerated)


def hamiltonian_oracle(g: SimpleGraph, limits: Limits = DEFAULT_LIMITS) -> OracleResult:
    """Minimum distance sum over cyclic orderings: (n-1)!/2 candidates with
    vertex 1 pinned and reflections skipped."""
    if g.n < 3:
        raise PreconditionError("the Hamiltonian number needs at least 3 vertices")
    dist = _bfs_all_pairs(g)
    if any(
        dist[u][v] is None for u in range(1, g.n + 1) for v in range(u + 1, g.n + 1)
    ):
        raise PreconditionError("the Hamiltonian number needs a connected graph")
    limits.check_steps(math.factorial(g.n - 1) // 2, "Hamiltonian oracle")
    best: int | None = None
    best_order = None
    enumerated = 0
    rest = list(range(2, g.n + 1))
    for perm in permutations(rest):
        if perm[0] > perm[-1]:  # each cycle once, not its reflection
            continue
        enumerated += 1
        order = (1, *perm)
        total = sum(
            dist[order[i]][order[(i + 1) % g.n]] for i in range(g.n)
        )
        if best is None or total < best:
            best = total
            best_order = order
    assert best is not None and best_order is not None
    return OracleResult(best, best_order, enumerated)


# -- local graph helpers (kept independent of the spectral modules) -------------


def _bfs_all_pairs(g: SimpleGraph) -> list[list[int | None]]:
    adj = _adjacency(g)
    dist: list[list[int | None]] = [
        [None] * (g.n + 1) for _ in range(g.n + 1)
    ]
    for src in range(1, g.n + 1):
        dist[src][src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[src][w] is None:
                    dist[src][w] = dist[src][u] + 1
                    queue.append(w)
    return dist


def _component_orders(g: SimpleGraph) -> list[int]:
    adj = _adjacency(g)
    unseen = set(range(1, g.n + 1))
    orders = []
    while unseen:
        stack = [unseen.pop()]
        size = 0
        while stack:
            u = stack.pop()
            size += 1
            for w in adj[u]:
                if w in unseen:
                    unseen.discard(w)
                    stack.append(w)
        orders.append(size)
    return sorted(orders)
