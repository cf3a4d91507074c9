"""Family-level algebra on weighted complete graphs.

A :class:`GraphFamily` is a finite deduplicated set of weighted complete
graphs sharing one vertex count.  The three family operations are

* product: all star products over all member pairs and all n! bijections,
* sum: all pairwise edgewise sums,
* power fixpoint: iterate ``F, F*F, (F*F)*F, ...`` until two consecutive
  powers agree as sets.

Members are kept in a canonical sorted order so that every downstream result
is deterministic regardless of construction order or worker interleaving.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import ring
from .errors import PreconditionError, StabilizationError
from .gadgets import (
    WeightedCompleteGraph,
    bijection_pair_maps,
    edge_indicator,
    indicator,
    pairs_in_rank_order,
)
from .graphs import SimpleGraph, complete_graph
from .limits import DEFAULT_LIMITS, Limits
from .ring import RingElem

__all__ = [
    "GraphFamily",
    "Spectrum",
    "FixpointResult",
    "singleton",
    "family_product",
    "family_sum",
    "power_fixpoint",
    "edge_deleted_family",
    "all_colorings_family",
    "colorings_of_graph",
    "in_palette_family",
    "iter_colorings",
    "spectrum_of",
    "ROMAN_PALETTE",
    "integer_palette",
]


class GraphFamily:
    """A deduplicated set of weighted complete graphs of one order."""

    __slots__ = ("n", "members", "_member_set")

    def __init__(self, n: int, members: Iterable[WeightedCompleteGraph]):
        member_set = frozenset(members)
        for m in member_set:
            if m.n != n:
                raise PreconditionError(
                    f"family of order {n} cannot contain a graph of order {m.n}"
                )
        self.n = n
        self.members = tuple(sorted(member_set, key=WeightedCompleteGraph.sort_key))
        self._member_set = member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[WeightedCompleteGraph]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self._member_set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GraphFamily)
            and self.n == other.n
            and self._member_set == other._member_set
        )

    def __hash__(self) -> int:
        return hash((self.n, self._member_set))

    def __repr__(self) -> str:
        return f"GraphFamily(n={self.n}, members={len(self.members)})"

    def to_json(self, member_threshold: int = 1000) -> dict:
        """Count always present; members listed only up to the threshold."""
        out: dict = {"n": self.n, "count": len(self.members)}
        if len(self.members) <= member_threshold:
            out["members"] = [m.to_json() for m in self.members]
        return out


class Spectrum:
    """The deduplicated set of total weights of a family, canonically sorted."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[RingElem]):
        self.values = tuple(sorted(set(values), key=RingElem.sort_key))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[RingElem]:
        return iter(self.values)

    def __contains__(self, item: object) -> bool:
        return item in set(self.values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Spectrum) and set(self.values) == set(other.values)

    def __hash__(self) -> int:
        return hash(frozenset(self.values))

    def as_integers(self) -> tuple[int, ...]:
        """Sorted integer values; raises unless every member is a real integer constant."""
        out = []
        for v in self.values:
            c = v.constant_value()
            if c.im != 0:
                raise ValueError(f"spectrum value {v} is not a real integer")
            out.append(c.re)
        return tuple(sorted(out))

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]

    def __repr__(self) -> str:
        return f"Spectrum({', '.join(str(v) for v in self.values)})"


class FixpointResult(NamedTuple):
    family: GraphFamily
    products: int  # number of family products computed before stabilizing


def singleton(member: WeightedCompleteGraph) -> GraphFamily:
    return GraphFamily(member.n, (member,))


def spectrum_of(family: GraphFamily | Iterable[WeightedCompleteGraph]) -> Spectrum:
    return Spectrum(m.total_weight() for m in family)


def family_product(
    left: GraphFamily, right: GraphFamily, limits: Limits = DEFAULT_LIMITS
) -> GraphFamily:
    """All star products left *_f right over members and bijections."""
    if left.n != right.n:
        raise PreconditionError(
            f"family product needs equal orders, got {left.n} and {right.n}"
        )
    n = left.n
    limits.check_n(n)
    limits.check_steps(
        len(left) * len(right) * math.factorial(n), "family product"
    )
    maps = bijection_pair_maps(n)
    out: set[WeightedCompleteGraph] = set()
    for h in left.members:
        for g in right.members:
            for _f, pair_map in maps:
                out.add(h.star_with_map(g, pair_map))
                if len(out) > limits.max_family:
                    limits.check_family(len(out), "family product")
    limits.check_time()
    return GraphFamily(n, out)


def family_sum(
    left: GraphFamily, right: GraphFamily, limits: Limits = DEFAULT_LIMITS
) -> GraphFamily:
    """All pairwise edgewise sums."""
    if left.n != right.n:
        raise PreconditionError(
            f"family sum needs equal orders, got {left.n} and {right.n}"
        )
    limits.check_steps(len(left) * len(right), "family sum")
    out: set[WeightedCompleteGraph] = set()
    for h in left.members:
        for g in right.members:
            out.add(h + g)
            if len(out) > limits.max_family:
                limits.check_family(len(out), "family sum")
    limits.check_time()
    return GraphFamily(left.n, out)


def power_fixpoint(
    family: GraphFamily, limits: Limits = DEFAULT_LIMITS
) -> FixpointResult:
    """Iterate star powers until two consecutive powers agree as sets.

    Stabilization is verified per instance, never assumed: if the sequence
    has not settled after C(n,2)+2 products, a :class:`StabilizationError`
    is raised."""
    cap = family.n * (family.n - 1) // 2 + 2
    current = family
    for step in range(1, cap + 1):
        nxt = family_product(current, family, limits)
        if nxt == current:
            return FixpointResult(current, step)
        current = nxt
    raise StabilizationError(
        f"family power did not stabilize within {cap} products"
    )


def edge_deleted_family(n: int) -> GraphFamily:
    """Indicators of the complete graph with one pair deleted, one per pair."""
    if n < 2:
        raise ValueError("need n >= 2 to delete an edge")
    full = indicator(complete_graph(n))
    members = []
    for idx in range(n * (n - 1) // 2):
        weights = list(full.weights)
        weights[idx] = ring.ZERO
        members.append(WeightedCompleteGraph(n, weights))
    return GraphFamily(n, members)


def all_colorings_family(
    n: int, k: int, limits: Limits = DEFAULT_LIMITS
) -> GraphFamily:
    """The family whose star product with a graph indicator produces every
    edge labeling of that graph by {1..k}.

    Built from the power fixpoint of the edge-deleted indicators: k-1 family
    sums of (fixpoint plus the complete indicator) and one final shift by the
    complete indicator."""
    if n < 2 or k < 1:
        raise PreconditionError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    limits.check_n(n)
    limits.check_family(k ** (n * (n - 1) // 2), f"all {k}-colorings of order {n}")
    full = indicator(complete_graph(n))
    acc = singleton(WeightedCompleteGraph.zero(n))
    if k > 1:
        base_members = set(power_fixpoint(edge_deleted_family(n), limits).family)
        base_members.add(full)
        base = GraphFamily(n, base_members)
        for _ in range(k - 1):
            acc = family_sum(acc, base, limits)
    return family_sum(acc, singleton(full), limits)


def integer_palette(k: int) -> tuple[RingElem, ...]:
    """The labels {1..k} as ring constants."""
    return tuple(ring.const(c) for c in range(1, k + 1))


# Colors for the edge Roman encoding: 0 decodes to label 1, -1 to label 0,
# y to label 2.
ROMAN_PALETTE: tuple[RingElem, ...] = (ring.ZERO, ring.const(-1), ring.Y)


def in_palette_family(
    h: WeightedCompleteGraph, palette: Sequence[RingElem]
) -> bool:
    """Definitional membership test for the family of palette-weighted
    complete graphs: the spectrum of h against the single-edge probe (the set
    of all pair weights) must lie inside the palette.

    The full family is never materialized (3^C(n,2) members for the edge
    Roman palette); products with it go through :func:`colorings_of_graph`.
    """
    if h.n < 2:
        return True
    probe = singleton(edge_indicator(1, 2, h.n))
    spec = spectrum_of(family_product(singleton(h), probe))
    return set(spec) <= set(palette)


def iter_colorings(
    g: SimpleGraph, palette: Sequence[RingElem]
) -> Iterator[WeightedCompleteGraph]:
    """Every assignment of palette values to E(G), zeros on non-edges.

    Enumeration order: edges sorted by pair rank, palette canonically sorted,
    assignments in lexicographic product order."""
    colors = sorted(set(palette), key=RingElem.sort_key)
    pairs = pairs_in_rank_order(g.n)
    edge_positions = [p for p, pair in enumerate(pairs) if pair in g.edges]
    base = [ring.ZERO] * len(pairs)
    for combo in itertools.product(colors, repeat=len(edge_positions)):
        weights = list(base)
        for pos, value in zip(edge_positions, combo):
            weights[pos] = value
        yield WeightedCompleteGraph(g.n, weights)


def colorings_of_graph(
    g: SimpleGraph, palette: Sequence[RingElem], limits: Limits = DEFAULT_LIMITS
) -> GraphFamily:
    """The materialized family of all palette colorings of E(G).

    This is the direct construction; the family-algebra route
    (indicator * all_colorings_family) must produce the same set, which the
    verification suite checks on small orders."""
    distinct = len(set(palette))
    limits.check_family(distinct ** g.m, f"{distinct}-colorings of {g.m} edges")
    return GraphFamily(g.n, iter_colorings(g, palette))
