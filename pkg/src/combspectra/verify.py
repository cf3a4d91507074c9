"""Corpus-level verification: spectral characterizations against brute force.

Each theorem subject sweeps every connected graph up to a size cap, runs the
spectrum characterization and the matching oracle, and reports per-graph
agreement rows; identity subjects check the algebraic identities the
constructions rely on.  Reports contain no timing and keep a canonical row
order, so the emitted JSON is byte-identical across runs and worker counts.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from random import Random
from typing import Sequence

from . import characterize as ch
from . import oracles as orc
from . import ring
from .corpus import connected_graphs_up_to
from .errors import PreconditionError
from .families import (
    ROMAN_PALETTE,
    all_colorings_family,
    colorings_of_graph,
    edge_deleted_family,
    family_product,
    integer_palette,
    iter_colorings,
    power_fixpoint,
    singleton,
)
from .gadgets import (
    WeightedCompleteGraph,
    cover_reader,
    degree_reader,
    indicator,
    pair_reader,
)
from .graphs import SimpleGraph, complete_graph, parse_graph6, to_graph6
from .limits import DEFAULT_LIMITS, Limits
from .ring import GaussInt, random_element, random_gauss_int

__all__ = [
    "THEOREM_SUBJECTS",
    "IDENTITY_SUBJECTS",
    "run_theorem",
    "run_identity",
]

REPORT_SCHEMA = "1"

THEOREM_SUBJECTS = (
    "colorings",
    "fixpoint",
    "antimagic",
    "antimagic-variants",
    "irregular-strength",
    "one-two-three",
    "domination",
    "edge-roman",
    "hamiltonian",
)

IDENTITY_SUBJECTS = ("ring-axioms", "S1", "E1", "R1", "all")


# -- per-graph row builders ------------------------------------------------------


def _rows_colorings(g: SimpleGraph, ks: Sequence[int], limits: Limits) -> list[dict]:
    g6 = to_graph6(g)
    rows = []
    for k in ks:
        built = family_product(
            singleton(indicator(g)), all_colorings_family(g.n, k, limits), limits
        )
        direct = colorings_of_graph(g, integer_palette(k), limits)
        rows.append(
            {
                "graph": g6,
                "n": g.n,
                "m": g.m,
                "k": k,
                "family_count": len(built),
                "direct_count": len(direct),
                "expected_count": k**g.m,
                "agree": built == direct and len(direct) == k**g.m,
            }
        )
    return rows


def _rows_fixpoint(n: int, limits: Limits) -> list[dict]:
    result = power_fixpoint(edge_deleted_family(n), limits)
    # Direct description of the fixed point: every 0/1 weighting of the
    # complete graph that keeps at least one zero pair.
    full = indicator(complete_graph(n))
    direct = {
        w
        for w in colorings_of_graph(
            complete_graph(n), (ring.ZERO, ring.ONE), limits
        )
        if w != full
    }
    return [
        {
            "n": n,
            "count": len(result.family),
            "expected_count": 2 ** (n * (n - 1) // 2) - 1,
            "products": result.products,
            "agree": set(result.family) == direct,
        }
    ]


def _rows_antimagic(g: SimpleGraph, limits: Limits) -> list[dict]:
    g6 = to_graph6(g)
    try:
        spectral = ch.antimagic_unweighted(g, limits).holds
    except PreconditionError:
        spectral = None
    try:
        oracle = orc.antimagic_oracle(g, limits).value
    except PreconditionError:
        oracle = None
    return [
        {
            "graph": g6,
            "n": g.n,
            "m": g.m,
            "spectral": spectral,
            "oracle": oracle,
            "agree": spectral == oracle,
        }
    ]


def _rows_antimagic_variants(g: SimpleGraph, limits: Limits) -> list[dict]:
    """Compare the exact-set single-graph reading with the coefficient-superset
    family reading on every |E|-coloring of the graph."""
    g6 = to_graph6(g)
    m = g.m
    limits.check_family(m**m, f"{m}-colorings of {m} edges")
    disagreements = 0
    members = 0
    for h in iter_colorings(g, integer_palette(m)):
        members += 1
        exact = ch.antimagic_weighted(h).holds
        superset = ch.antimagic_family(singleton(h), limits).holds
        if exact != superset:
            disagreements += 1
    return [
        {
            "graph": g6,
            "n": g.n,
            "m": m,
            "members": members,
            "variant_disagreements": disagreements,
            "agree": disagreements == 0,
        }
    ]


def _rows_strength(g: SimpleGraph, ks: Sequence[int], limits: Limits) -> list[dict]:
    g6 = to_graph6(g)
    k_max = max(ks)
    try:
        minimum = orc.strength_oracle(g, k_max, limits).value
    except PreconditionError:
        minimum = "rejected"
    rows = []
    for k in ks:
        try:
            spectral = ch.strength_at_most(g, k, limits).holds
        except PreconditionError:
            spectral = None
        if minimum == "rejected":
            oracle = None
        else:
            oracle = minimum is not None and minimum <= k
        rows.append(
            {
                "graph": g6,
                "n": g.n,
                "m": g.m,
                "k": k,
                "spectral": spectral,
                "oracle": oracle,
                "agree": spectral == oracle,
            }
        )
    return rows


def _rows_one_two_three(g: SimpleGraph, limits: Limits) -> list[dict]:
    g6 = to_graph6(g)
    spectral = ch.one_two_three(g, limits).holds
    oracle = orc.chi_sigma_oracle(g, 3, limits).value
    return [
        {
            "graph": g6,
            "n": g.n,
            "m": g.m,
            "spectral": spectral,
            "oracle": oracle,
            "agree": spectral == oracle,
        }
    ]


def _dominates(g: SimpleGraph, chosen: frozenset) -> bool:
    return all(
        v in chosen or g.neighbors(v) & chosen for v in range(1, g.n + 1)
    )


def _rows_domination(g: SimpleGraph, limits: Limits) -> list[dict]:
    g6 = to_graph6(g)
    rows = []
    for k in range(1, g.n):
        verdict = ch.dominating_k(g, k, limits)
        oracle = orc.domination_oracle(g, k, limits).value
        witness_ok = True
        if verdict.holds:
            assert verdict.witness_bijection is not None
            chosen = ch.dominating_set_of(verdict.witness_bijection, g.n, k)
            witness_ok = _dominates(g, chosen)
        rows.append(
            {
                "graph": g6,
                "n": g.n,
                "m": g.m,
                "k": k,
                "spectral": verdict.holds,
                "oracle": oracle,
                "witness_ok": witness_ok,
                "agree": verdict.holds == oracle and witness_ok,
            }
        )
    return rows


def _roman_valid(g: SimpleGraph, fn: dict[tuple[int, int], int]) -> bool:
    edges = g.sorted_edges()
    for e in edges:
        if fn[e] == 0:
            if not any(
                fn[e2] == 2 and e2 != e and set(e) & set(e2) for e2 in edges
            ):
                return False
    return True


def _rows_edge_roman(g: SimpleGraph, limits: Limits) -> list[dict]:
    g6 = to_graph6(g)
    if g.m < 1:
        return []
    gamma = orc.edge_roman_oracle(g, limits).value
    # Weight identity: the decoded weight of every coloring must equal
    # |E| plus its total weight at y=1.
    identity_failures = 0
    enumerated = 0
    for h in iter_colorings(g, ROMAN_PALETTE):
        enumerated += 1
        decoded = ch.decode_edge_roman(h, g)
        direct = sum(decoded.values())
        via_total = g.m + h.total_weight().eval(1, 1).re
        if direct != via_total:
            identity_failures += 1
    rows = [
        {
            "graph": g6,
            "n": g.n,
            "m": g.m,
            "k": None,
            "gamma": gamma,
            "colorings": enumerated,
            "weight_identity_failures": identity_failures,
            "agree": identity_failures == 0,
        }
    ]
    for k in range(1, g.m):
        verdict = ch.edge_roman_at_most(g, k, limits)
        oracle = gamma <= k
        witness_ok = True
        if verdict.holds:
            assert verdict.witness_graph is not None
            fn = ch.decode_edge_roman(verdict.witness_graph, g)
            witness_ok = _roman_valid(g, fn) and sum(fn.values()) <= k
        rows.append(
            {
                "graph": g6,
                "n": g.n,
                "m": g.m,
                "k": k,
                "spectral": verdict.holds,
                "oracle": oracle,
                "witness_ok": witness_ok,
                "agree": verdict.holds == oracle and witness_ok,
            }
        )
    return rows


def _rows_hamiltonian(g: SimpleGraph, limits: Limits) -> list[dict]:
    g6 = to_graph6(g)
    spectral = ch.hamiltonian_number(g)
    oracle = orc.hamiltonian_oracle(g, limits).value
    return [
        {
            "graph": g6,
            "n": g.n,
            "m": g.m,
            "spectral": spectral,
            "oracle": oracle,
            "agree": spectral == oracle,
        }
    ]


# -- worker plumbing ---------------------------------------------------------------


def _theorem_task(args: tuple) -> list[dict]:
    subject, payload, ks, limits_fields = args
    limits = Limits(*limits_fields)
    if subject == "fixpoint":
        return _rows_fixpoint(payload, limits)
    g = parse_graph6(payload)
    if subject == "colorings":
        return _rows_colorings(g, ks, limits)
    if subject == "antimagic":
        return _rows_antimagic(g, limits)
    if subject == "antimagic-variants":
        return _rows_antimagic_variants(g, limits)
    if subject == "irregular-strength":
        return _rows_strength(g, ks, limits)
    if subject == "one-two-three":
        return _rows_one_two_three(g, limits)
    if subject == "domination":
        return _rows_domination(g, limits)
    if subject == "edge-roman":
        return _rows_edge_roman(g, limits)
    if subject == "hamiltonian":
        return _rows_hamiltonian(g, limits)
    raise ValueError(f"unknown theorem subject {subject!r}")


_MIN_N = {
    "colorings": 2,
    "antimagic": 2,
    "antimagic-variants": 2,
    "irregular-strength": 2,
    "one-two-three": 3,
    "domination": 2,
    "edge-roman": 2,
    "hamiltonian": 3,
}

_DEFAULT_KS = {"colorings": (2, 3), "irregular-strength": (1, 2, 3)}


def run_theorem(
    subject: str,
    max_n: int,
    ks: Sequence[int] | None = None,
    workers: int = 1,
    limits: Limits = DEFAULT_LIMITS,
) -> dict:
    """Sweep a theorem subject over the connected-graph corpus.

    Returns a deterministic report dict; ``summary.disagreements`` counts rows
    where the two routes differ or a witness failed its own definition.
    """
    if subject not in THEOREM_SUBJECTS:
        raise ValueError(f"unknown theorem subject {subject!r}")
    if ks is None:
        ks = _DEFAULT_KS.get(subject, ())
    limits_fields = (limits.max_n, limits.max_family, limits.max_steps, limits.deadline)
    if subject == "fixpoint":
        tasks = [
            (subject, n, tuple(ks), limits_fields) for n in range(2, max_n + 1)
        ]
    else:
        graphs = connected_graphs_up_to(max_n, min_n=_MIN_N[subject])
        tasks = [
            (subject, to_graph6(g), tuple(ks), limits_fields) for g in graphs
        ]
    limits.check_time()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_theorem_task, tasks, chunksize=1))
        limits.check_time()
    else:
        results = []
        for t in tasks:
            results.append(_theorem_task(t))
            limits.check_time()
    rows = [row for chunk in results for row in chunk]
    disagreements = sum(1 for row in rows if not row["agree"])
    return {
        "schema": REPORT_SCHEMA,
        "kind": "theorem",
        "subject": subject,
        "params": {"max_n": max_n, "ks": list(ks)},
        "rows": rows,
        "summary": {
            "tasks": len(tasks),
            "rows": len(rows),
            "disagreements": disagreements,
        },
    }


# -- identity suites -----------------------------------------------------------------


def _ring_axiom_failures(trials: int, seed: int) -> tuple[int, int]:
    rng = Random(seed)
    failures = 0
    checks = 0

    def expect(cond: bool) -> None:
        nonlocal failures, checks
        checks += 1
        if not cond:
            failures += 1

    for _ in range(trials):
        a = random_element(rng)
        b = random_element(rng)
        c = random_element(rng)
        d = random_gauss_int(rng)
        if d.is_zero:
            d = GaussInt(1, 1)
        px, py = random_gauss_int(rng, 3), random_gauss_int(rng, 3)
        expect(a + b == b + a)
        expect((a + b) + c == a + (b + c))
        expect(a * b == b * a)
        expect((a * b) * c == a * (b * c))
        expect(a * (b + c) == a * b + a * c)
        expect(a + ring.ZERO == a)
        expect(a * ring.ONE == a)
        expect(a + (-a) == ring.ZERO)
        expect((a + b).eval(px, py) == a.eval(px, py) + b.eval(px, py))
        expect((a * b).eval(px, py) == a.eval(px, py) * b.eval(px, py))
        rebuilt = ring.ZERO
        for j, coeff in a.coeffs_x().items():
            rebuilt = rebuilt + coeff * ring.x_pow(j)
        expect(rebuilt == a)
        expect((a * ring.const(d.re, d.im)).exact_div(d) == a)
    return checks, failures


def _reader_at_one(reader: WeightedCompleteGraph) -> WeightedCompleteGraph:
    return WeightedCompleteGraph(
        reader.n,
        tuple(ring.const(*w.eval(1, 1)) for w in reader.weights),
    )


def _identity_rows(subject: str, ns: Sequence[int], trials: int, seed: int) -> list[dict]:
    rows = []
    if subject in ("ring-axioms", "all"):
        checks, failures = _ring_axiom_failures(trials, seed)
        rows.append(
            {
                "identity": "ring-axioms",
                "trials": trials,
                "seed": seed,
                "checks": checks,
                "failures": failures,
                "agree": failures == 0,
            }
        )
    for name, build, scale_of in (
        ("S1", degree_reader, lambda n: ring.const(2)),
        ("E1", pair_reader, lambda n: ring.ONE),
        ("R1", cover_reader, lambda n: ring.const(2 * n - 4, 1)),
    ):
        if subject not in (name, "all"):
            continue
        for n in ns:
            expected = indicator(complete_graph(n)).scale(scale_of(n))
            rows.append(
                {
                    "identity": name,
                    "n": n,
                    "agree": _reader_at_one(build(n)) == expected,
                }
            )
    return rows


def run_identity(
    subject: str,
    ns: Sequence[int] = (3, 4, 5, 6),
    trials: int = 1000,
    seed: int = 1,
) -> dict:
    """Run an algebraic identity suite; deterministic for a fixed seed."""
    if subject not in IDENTITY_SUBJECTS:
        raise ValueError(f"unknown identity subject {subject!r}")
    rows = _identity_rows(subject, ns, trials, seed)
    disagreements = sum(1 for row in rows if not row["agree"])
    return {
        "schema": REPORT_SCHEMA,
        "kind": "identity",
        "subject": subject,
        "params": {"ns": list(ns), "trials": trials, "seed": seed},
        "rows": rows,
        "summary": {"rows": len(rows), "disagreements": disagreements},
    }
