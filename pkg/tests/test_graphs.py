"""Graph parsing, distances, components, and the two input formats."""

import networkx as nx
import pytest

from combspectra.errors import ParseError, PreconditionError
from combspectra.graphs import (
    SimpleGraph,
    all_pairs_distances,
    complete_graph,
    component_orders,
    cycle_graph,
    is_connected,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    path_graph,
    star_graph,
    to_edge_list,
    to_graph6,
)


def test_parse_examples():
    p3 = parse_edge_list("3 2\n1 2\n2 3")
    assert p3 == path_graph(3)
    k2 = parse_edge_list("2 1\n1 2")
    assert k2 == complete_graph(2)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2.*loop"):
        parse_edge_list("3 1\n1 1")
    with pytest.raises(ParseError, match="line 3.*duplicate"):
        parse_edge_list("3 2\n1 2\n2 1")
    with pytest.raises(ParseError, match="line 2.*out of range"):
        parse_edge_list("3 1\n1 4")
    with pytest.raises(ParseError, match="line 2.*non-integer"):
        parse_edge_list("3 1\nx y")
    with pytest.raises(ParseError, match="promised 2"):
        parse_edge_list("3 2\n1 2")
    with pytest.raises(ParseError, match="empty"):
        parse_edge_list("# just a comment\n")


def test_parse_ignores_blanks_and_comments():
    g = parse_edge_list("# path\n\n3 2\n1 2\n\n# more\n2 3\n")
    assert g == path_graph(3)


def test_distances():
    t = all_pairs_distances(path_graph(3))
    assert (t.get(1, 2), t.get(2, 3), t.get(1, 3)) == (1, 1, 2)
    assert t.get(2, 2) == 0
    k3 = all_pairs_distances(complete_graph(3))
    assert all(k3.get(u, v) == 1 for u in (1, 2, 3) for v in (1, 2, 3) if u != v)
    iso = all_pairs_distances(SimpleGraph(2))
    assert iso.get(1, 2) is None


def test_distance_symmetry_and_triangle():
    g = cycle_graph(6)
    t = all_pairs_distances(g)
    for u in range(1, 7):
        for v in range(1, 7):
            assert t.get(u, v) == t.get(v, u)
            for w in range(1, 7):
                assert t.get(u, v) <= t.get(u, w) + t.get(w, v)


def test_component_orders():
    assert component_orders(path_graph(3)) == (3,)
    g = SimpleGraph(5, [(1, 2), (3, 4), (4, 5), (3, 5)])
    assert component_orders(g) == (2, 3)
    assert component_orders(SimpleGraph(1)) == (1,)
    assert is_connected(cycle_graph(4))
    assert not is_connected(SimpleGraph(3, [(1, 2)]))


def test_edge_list_round_trip():
    for g in (path_graph(4), cycle_graph(5), star_graph(4), SimpleGraph(2)):
        assert parse_edge_list(to_edge_list(g)) == g


def test_graph6_round_trip():
    for g in (path_graph(3), complete_graph(4), cycle_graph(5), SimpleGraph(1)):
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_against_networkx():
    for g in (path_graph(3), complete_graph(5), star_graph(6), cycle_graph(7)):
        ours = to_graph6(g)
        gx = nx.from_graph6_bytes(ours.encode())
        assert set(gx.nodes) == set(range(g.n))
        assert {(min(u, v) + 1, max(u, v) + 1) for u, v in gx.edges} == g.edges


def test_graph6_header_and_errors():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)
    with pytest.raises(ParseError):
        parse_graph6("")
    with pytest.raises(ParseError):
        parse_graph6("B")  # truncated data


def test_parse_graph_auto_detects():
    assert parse_graph("3 2\n1 2\n2 3\n") == path_graph(3)
    assert parse_graph("Bw\n") == complete_graph(3)


def test_constructors_and_accessors():
    g = star_graph(4)
    assert g.m == 3 and g.degree(1) == 3 and g.degree(2) == 1
    assert g.neighbors(1) == {2, 3, 4}
    assert g.has_edge(1, 3) and not g.has_edge(2, 3)
    with pytest.raises(ValueError):
        SimpleGraph(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimpleGraph(0)
    with pytest.raises(PreconditionError):
        cycle_graph(2)


def test_relabel():
    g = path_graph(3).relabel((2, 1, 3))  # swap vertices 1 and 2
    assert g.edges == {(1, 2), (1, 3)}
