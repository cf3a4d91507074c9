"""Spectrum characterizations: worked examples, witnesses, structural identities."""

from random import Random

import pytest

from combspectra import ring
from combspectra.characterize import (
    antimagic_family,
    antimagic_unweighted,
    antimagic_weighted,
    decode_edge_roman,
    dominating_k,
    dominating_set_of,
    edge_roman_at_most,
    hamiltonian_number,
    hamiltonian_spectrum,
    irregular_weighted,
    local_irregular_weighted,
    one_two_three,
    strength_at_most,
)
from combspectra.errors import PreconditionError, SizeGuardError
from combspectra.families import ROMAN_PALETTE, iter_colorings, singleton
from combspectra.gadgets import (
    bijection_pair_maps,
    cover_reader,
    domination_probe,
    edge_indicator,
    indicator,
    star_indicator,
    star_sum,
    weighted_embedding,
)
from combspectra.graphs import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from combspectra.limits import Limits
from combspectra.ring import GaussInt, const, x_pow

P3 = path_graph(3)
P4 = path_graph(4)
C3 = cycle_graph(3)
C4 = cycle_graph(4)
K2 = complete_graph(2)


def embed(g, values):
    return weighted_embedding(g, {e: v for e, v in zip(g.sorted_edges(), values)})


# -- antimagic -------------------------------------------------------------------


def test_antimagic_weighted_examples():
    assert antimagic_weighted(embed(P3, (1, 2))).holds
    assert not antimagic_weighted(embed(K2, (1,)), is_complete=True).holds
    assert not antimagic_weighted(embed(P3, (1, 1))).holds


def test_antimagic_weighted_edge_spectrum_is_exact_set():
    # a skipped label breaks the non-complete exact-set condition
    assert not antimagic_weighted(embed(P3, (1, 3))).holds
    # an off-range label on a complete weighting breaks the complete branch
    assert not antimagic_weighted(embed(C3, (1, 2, 4))).holds
    assert antimagic_weighted(embed(C3, (1, 2, 3))).holds


def test_antimagic_weighted_rejects_symbolic_weights():
    bad = weighted_embedding(P3, {(1, 2): ring.X, (2, 3): 1})
    with pytest.raises(PreconditionError):
        antimagic_weighted(bad)


def test_antimagic_family_examples():
    v = antimagic_family(singleton(embed(P3, (1, 2))))
    assert v.holds
    assert v.witness_polynomial == (
        ring.ONE + 3 * ring.X + 2 * x_pow(2) + x_pow(3) + 2 * x_pow(5)
    )
    v = antimagic_family(singleton(embed(P3, (1, 1))), exhaustive=True)
    assert not v.holds
    assert v.stats.bijections == 6 and v.stats.witnesses == 0


def test_antimagic_family_empty_fails():
    from combspectra.families import GraphFamily

    assert not antimagic_family(GraphFamily(3, [])).holds


def test_antimagic_unweighted_examples():
    v = antimagic_unweighted(P3)
    assert v.holds
    labels = {e: v.witness_graph.weight(*e).constant_value().re for e in P3.edges}
    assert sorted(labels.values()) == [1, 2]
    with pytest.raises(PreconditionError):
        antimagic_unweighted(SimpleGraph(3, [(1, 2)]))  # isolated vertex
    assert not antimagic_unweighted(K2).holds
    assert antimagic_unweighted(C3).holds


def test_antimagic_size_guard():
    with pytest.raises(SizeGuardError):
        antimagic_unweighted(complete_graph(5), Limits(max_family=1000))


# -- irregularity ----------------------------------------------------------------


def test_irregular_weighted_examples():
    assert irregular_weighted(embed(P3, (1, 2))).holds
    assert not irregular_weighted(embed(P3, (1, 1))).holds
    assert irregular_weighted(embed(C3, (1, 2, 3))).holds


def test_strength_examples():
    assert not strength_at_most(P3, 1).holds
    assert strength_at_most(P3, 2).holds
    assert strength_at_most(C3, 3).holds
    assert not strength_at_most(C3, 2).holds
    assert strength_at_most(P4, 2).holds
    assert not strength_at_most(K2, 5).holds  # both endpoint sums always equal


def test_strength_counts_zero_coefficients():
    # isolated vertices are rejected rather than silently compared as zeros
    with pytest.raises(PreconditionError):
        strength_at_most(SimpleGraph(3, [(1, 2)]), 2)


# -- local irregularity / labels 1-3 -----------------------------------------------


def test_local_irregular_examples():
    assert local_irregular_weighted(indicator(P3)).holds
    assert not local_irregular_weighted(indicator(K2)).holds
    assert not local_irregular_weighted(indicator(C4)).holds
    assert local_irregular_weighted(embed(C4, (1, 2, 1, 2))).holds


def test_one_two_three_examples():
    v = one_two_three(P3)
    assert v.holds
    assert all(
        v.witness_graph.weight(*e) == ring.ONE for e in P3.edges
    )  # the all-1 labeling already works
    assert one_two_three(C3).holds
    with pytest.raises(PreconditionError):
        one_two_three(K2)
    with pytest.raises(PreconditionError):
        one_two_three(SimpleGraph(4, [(1, 2), (2, 3), (1, 3)]))  # isolated vertex


def test_one_two_three_witness_polynomial_p3():
    v = one_two_three(P3)
    p = v.witness_polynomial
    assert p.coeff_x(0) == ring.I - ring.ONE
    assert p.coeff_x(1) == ring.ZERO
    assert p.coeff_x(2) == ring.ONE + ring.I
    for j in range(3):
        assert not p.coeff_x(j).classify().is_nonzero_pure_imaginary


# -- domination ---------------------------------------------------------------------


def test_dominating_examples():
    v = dominating_k(P3, 1)
    assert v.holds
    assert dominating_set_of(v.witness_bijection, 3, 1) == {2}
    assert v.witness_polynomial == ring.ONE + ring.X
    assert not dominating_k(C4, 1).holds
    assert dominating_k(C4, 2).holds
    with pytest.raises(PreconditionError):
        dominating_k(P3, 3)
    with pytest.raises(PreconditionError):
        dominating_k(P3, 0)


def test_dominating_identity_bijection_rejected_for_p3():
    # under the identity the selected set {3} does not dominate: coefficient 0 drops out
    p = star_sum(domination_probe(1, 3), indicator(P3), bijection_pair_maps(3)[0][1])
    assert p == ring.X
    assert p.coeff_x(0).is_zero


def test_domination_coefficient_identity():
    # coefficient j-1 counts neighbors of f(j) inside the selected tail set
    for g in (P4, C4, star_graph(4)):
        for k in (1, 2, 3):
            probe = domination_probe(k, g.n)
            for f, pmap in bijection_pair_maps(g.n):
                p = star_sum(probe, indicator(g), pmap)
                chosen = dominating_set_of(f, g.n, k)
                for j in range(1, g.n - k + 1):
                    expected = len(g.neighbors(f[j - 1]) & chosen)
                    assert p.coeff_x(j - 1) == const(expected)


# -- edge Roman domination -------------------------------------------------------------


def test_edge_roman_examples():
    assert edge_roman_at_most(P3, 2).holds
    assert not edge_roman_at_most(P3, 1).holds
    v = edge_roman_at_most(P4, 2)
    assert v.holds
    fn = decode_edge_roman(v.witness_graph, P4)
    assert fn == {(1, 2): 0, (2, 3): 2, (3, 4): 0}
    with pytest.raises(PreconditionError):
        edge_roman_at_most(SimpleGraph(3), 1)


def test_edge_roman_worked_witness():
    # the coloring (y, -1) on the 3-path and the identity placement
    h = weighted_embedding(P3, {(1, 2): ring.Y, (2, 3): const(-1)})
    p = star_sum(h, cover_reader(3), bijection_pair_maps(3)[0][1])
    assert p == (ring.I * ring.Y - ring.ONE) + (ring.Y - ring.ONE) * ring.X + (
        ring.Y - ring.I
    ) * x_pow(2)
    for j in range(3):
        assert not p.coeff_x(j).classify().is_in_minus_i_plus_z
    assert p.eval(1, 1) == GaussInt(0, 0)
    quotient = p.eval(1, 1).exact_div(GaussInt(2, 1))
    assert P3.m + quotient.re == 2
    assert decode_edge_roman(h, P3) == {(1, 2): 2, (2, 3): 0}


def test_edge_roman_weight_identity_every_coloring():
    for g in (P3, P4, C4):
        for h in iter_colorings(g, ROMAN_PALETTE):
            decoded = decode_edge_roman(h, g)
            assert sum(decoded.values()) == g.m + h.total_weight().eval(1, 1).re


def test_edge_roman_weight_evaluation_is_bijection_free():
    rng = Random(0)
    reader = cover_reader(4)
    maps = bijection_pair_maps(4)
    colorings = list(iter_colorings(C4, ROMAN_PALETTE))
    for h in rng.sample(colorings, 20):
        values = {star_sum(h, reader, pmap).eval(1, 1) for _f, pmap in maps}
        assert len(values) == 1
        assert values.pop() == GaussInt(2 * 4 - 4, 1) * h.total_weight().eval(1, 1)


def test_edge_roman_bad_coefficient_detects_violations():
    # a -1 edge with no adjacent y edge lands exactly in -i + Z
    h = weighted_embedding(P4, {(1, 2): const(-1), (2, 3): ring.ZERO, (3, 4): ring.Y})
    p = star_sum(h, cover_reader(4), bijection_pair_maps(4)[0][1])
    bad = [j for j in range(6) if p.coeff_x(j).classify().is_in_minus_i_plus_z]
    assert bad  # the probe focused on {1,2} sees -i plus an integer


# -- Hamiltonian spectra ------------------------------------------------------------------


def test_hamiltonian_examples():
    assert hamiltonian_spectrum(C3, P3).as_integers() == (4,)
    assert hamiltonian_number(P3) == 4
    for n in (3, 4, 5):
        assert hamiltonian_number(cycle_graph(n)) == n
    assert hamiltonian_number(star_graph(4)) == 6
    with pytest.raises(PreconditionError):
        hamiltonian_number(SimpleGraph(4, [(1, 2)]))
    with pytest.raises(PreconditionError):
        hamiltonian_spectrum(C4, P3)
    with pytest.raises(PreconditionError):
        hamiltonian_number(K2)


# -- coefficient structure of the combined reader ---------------------------------------


def test_combined_reader_coefficient_structure():
    # head coefficients are endpoint sums; the tail block lists pair weights
    from combspectra.characterize import _antimagic_gadget
    from combspectra.gadgets import pairs_in_rank_order

    rng = Random(21)
    n = 4
    gadget_pairs = [star_indicator(j + 1, n) for j in range(n)] + [
        edge_indicator(u, v, n) for u, v in pairs_in_rank_order(n)
    ]
    gadget = _antimagic_gadget(n)
    for g in (P4, C4, complete_graph(4)):
        labels = {e: rng.randint(0, 4) for e in g.edges}
        emb = weighted_embedding(g, labels)
        for f, pmap in bijection_pair_maps(n):
            p = star_sum(emb, gadget, pmap)
            for j, basis in enumerate(gadget_pairs):
                expected = star_sum(emb, basis, pmap)
                assert p.coeff_x(j) == expected


# -- verdict plumbing ---------------------------------------------------------------------


def test_verdict_invariant_holds_implies_witness():
    for verdict in (
        antimagic_unweighted(P3),
        strength_at_most(P3, 2),
        one_two_three(C3),
        dominating_k(P3, 1),
        edge_roman_at_most(P4, 2),
        antimagic_weighted(embed(P3, (1, 2))),
        irregular_weighted(embed(P3, (1, 2))),
        local_irregular_weighted(indicator(P3)),
    ):
        assert verdict.holds
        assert any(
            w is not None
            for w in (
                verdict.witness_polynomial,
                verdict.witness_graph,
                verdict.witness_bijection,
            )
        )


def test_exhaustive_mode_counts_witnesses():
    v = dominating_k(P3, 1, exhaustive=True)
    assert v.holds
    assert v.stats.witnesses == 2  # f maps vertex 2 into the tail in two ways
    first = dominating_k(P3, 1)
    assert first.witness_bijection == v.witness_bijection  # same first witness


def test_verdict_json_shape():
    v = dominating_k(P3, 1)
    data = v.to_json()
    assert data["holds"] is True
    assert "polynomial" in data["witness"] and "bijection" in data["witness"]
    assert set(data["stats"]) == {"members", "bijections"}


def test_stats_counters():
    v = antimagic_family(singleton(embed(P3, (1, 1))), exhaustive=True)
    assert v.stats.members == 1
    assert v.stats.bijections == 6
    assert v.stats.elapsed >= 0.0


# -- cross-route consistency: family search vs single-weighting checks ------------


def test_one_two_three_matches_member_level_checks():
    from combspectra.families import integer_palette, iter_colorings

    for g in (P3, C3, P4, C4):
        member_route = any(
            local_irregular_weighted(h).holds
            for h in iter_colorings(g, integer_palette(3))
        )
        assert one_two_three(g).holds == member_route


def test_strength_matches_member_level_checks():
    from combspectra.families import integer_palette, iter_colorings

    for g in (P3, C3, star_graph(4)):
        for k in (1, 2, 3):
            member_route = any(
                irregular_weighted(h).holds
                for h in iter_colorings(g, integer_palette(k))
            )
            assert strength_at_most(g, k).holds == member_route


def test_antimagic_matches_member_level_checks():
    from combspectra.families import integer_palette, iter_colorings

    for g in (P3, C3, K2):
        member_route = any(
            antimagic_weighted(h, is_complete=(g.m == g.n * (g.n - 1) // 2)).holds
            for h in iter_colorings(g, integer_palette(g.m))
        )
        assert antimagic_unweighted(g).holds == member_route
