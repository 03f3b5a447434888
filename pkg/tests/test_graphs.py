from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from mcturan.graphs import (ContractViolation, CriticalColoring, MultiGraph, PatternMultigraph,
                            SimpleGraph, SizeLimitError, all_pairs, canonical_mult,
                            chromatic_number, clique_pattern, color_reduce, critical_colorings,
                            critical_edges, cycle_pattern, pair_index, turan_count,
                            turan_estimates, turan_graph, turan_part_sizes, validate_pattern)
from oracles import brute_chromatic


def graphs(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.sets(st.sampled_from(all_pairs(n)) if n > 1 else st.nothing())
        .map(lambda es: SimpleGraph(n, frozenset(es))))


def test_pair_index_is_lexicographic():
    n = 6
    assert [pair_index(u, v, n) for u, v in all_pairs(n)] == list(range(comb(n, 2)))
    assert pair_index(3, 1, n) == pair_index(1, 3, n)


def test_simple_graph_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(0, 3)}))


def test_multigraph_accounting():
    g = MultiGraph.from_dict(4, 3, {(0, 1): 2, (1, 2): 3, (0, 3): 1})
    assert g.total == 6
    assert g.degrees() == [3, 5, 3, 1]
    assert g.degree(1, within=[2]) == 3
    assert g.max_multiplicity() == 3
    with pytest.raises(ValueError):
        MultiGraph.from_dict(3, 1, {(0, 1): 2})


@pytest.mark.parametrize("n,parts,m", [(4, 2, 4), (5, 2, 6), (6, 3, 12), (10, 4, 37), (7, 7, 21)])
def test_turan_counts(n, parts, m):
    assert turan_count(n, parts) == m
    assert turan_graph(n, parts).m == m


def test_turan_bad_parts():
    for parts in (0, 6):
        with pytest.raises(ValueError):
            turan_graph(5, parts)


def test_turan_part_sizes_balanced():
    assert sorted(turan_part_sizes(10, 4)) == [2, 2, 3, 3]


@given(st.integers(2, 12), st.integers(2, 6))
def test_turan_estimates_sandwich(n, r):
    if n < r:
        return
    est = turan_estimates(n, r)
    assert est["edges_lower"] <= est["edges"] <= est["edges_upper"]
    assert est["min_degree_lower"] <= est["min_degree"] <= est["min_degree_upper"]
    assert isinstance(est["edges_lower"], Fraction)


def test_chromatic_examples():
    assert chromatic_number(SimpleGraph.complete(4)) == 4
    assert chromatic_number(SimpleGraph.cycle(5)) == 3
    assert chromatic_number(SimpleGraph.empty(3)) == 1
    with pytest.raises(SizeLimitError):
        chromatic_number(SimpleGraph.empty(5), cap=4)


@given(graphs(6))
def test_chromatic_matches_brute_force(g):
    assert chromatic_number(g) == brute_chromatic(g.n, g.edges)


def test_critical_edges_examples():
    assert sorted(critical_edges(cycle_pattern(5))) == sorted(cycle_pattern(5).underlying().edges)
    assert len(critical_edges(clique_pattern(4))) == 6
    pendant = PatternMultigraph.from_edges(5, list(combinations(range(4), 2)) + [(3, 4)])
    assert sorted(critical_edges(pendant)) == list(combinations(range(4), 2))
    assert pendant.is_color_critical


def test_critical_colorings_k3():
    (c,) = critical_colorings(clique_pattern(3))
    assert c.classes == ((0,), (1,), (2,))
    assert set(c.witness_pairs) == {(0, 1), (0, 2), (1, 2)}


def test_critical_colorings_c5_reduce():
    C = cycle_pattern(5)
    cols = critical_colorings(C)
    assert len(cols) == 5  # one per choice of the singleton class
    c = next(c for c in cols if c.classes == ((0, 2), (1, 3), (4,)))
    assert set(c.witness_pairs) == {(0, 2), (1, 2)}
    red = color_reduce(C, c)
    assert sorted(red.mult, reverse=True) == [3, 1, 1]
    assert red.h == 5


def test_critical_colorings_reject_bipartite():
    with pytest.raises(ValueError):
        critical_colorings(PatternMultigraph.from_simple(SimpleGraph.cycle(4)))


def test_color_reduce_identity_and_violation():
    K = clique_pattern(4)
    single = CriticalColoring(((0,), (1,), (2,), (3,)), ((0, 1),))
    assert color_reduce(K, single).mult == K.mult
    with pytest.raises(ContractViolation):
        color_reduce(K, CriticalColoring(((0, 1), (2,), (3,)), ((1, 2),)))


def test_classes_independent_and_witness_exact():
    for H in (cycle_pattern(5), clique_pattern(4), cycle_pattern(7)):
        for c in critical_colorings(H):
            for cls in c.classes:
                assert all(H.w(u, v) == 0 for u, v in combinations(cls, 2))
            red = color_reduce(H, c)
            assert all(red.w(i, j) == 1 for i, j in c.witness_pairs)
            assert red.h == H.h


def test_validate_pattern_examples():
    assert validate_pattern(clique_pattern(5)).ok
    heavy = clique_pattern(5).with_cap(3).with_pair(0, 1, 3)
    assert heavy.total == 12 and max(heavy.degrees()) == 6
    assert validate_pattern(heavy).ok
    rep = validate_pattern(clique_pattern(5).with_pair(0, 1, 0))
    assert not rep.ok and rep.failures[0]["item"] == "positive"


@given(st.lists(st.integers(0, 3), min_size=6, max_size=6), st.permutations(range(4)))
def test_canonical_form_invariant_under_relabel(mult, perm):
    g = MultiGraph(4, 3, tuple(mult))
    assert g.relabel(perm).canonical_form() == g.canonical_form()
    assert canonical_mult(4, mult) <= tuple(mult)
