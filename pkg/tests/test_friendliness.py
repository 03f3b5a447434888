import random
from itertools import product

import pytest

from mcturan.colorings import from_multiplicity
from mcturan.friendliness import (PartiteHost, augment, build_f_plus, is_h_friendly,
                                  kplus_friendly_probe, minimal_attachments)
from mcturan.graphs import MultiGraph, PatternMultigraph, clique_pattern, cycle_pattern
from mcturan.rainbow import has_rainbow_general, has_rainbow_nested

K3 = clique_pattern(3)
REDUCED_C5 = PatternMultigraph.from_edges(3, [(0, 1, 3), (1, 2), (0, 2)])


def host(c, k=4, t=1, parts=2):
    return PartiteHost.complete(parts, t, c, k)


def test_minimal_attachment_examples():
    assert list(minimal_attachments(host(4))) == [(1, 3), (2, 2), (3, 1)]
    assert list(minimal_attachments(host(1, k=1))) == [(1, 1)]
    five = list(minimal_attachments(PartiteHost.complete(4, 1, 2, 2)))
    assert len(five) == 6
    assert all(sum(a) == 6 and min(a) >= 1 for a in five)
    assert list(minimal_attachments(host(0, k=0))) == []


def _is_admissible(K, a):
    return (sum(a) >= K.required_degree and all(0 <= x <= K.k for x in a)
            and all(sum(a[v] for v in p) >= 1 for p in K.parts))


@pytest.mark.parametrize("parts,t,k", [(2, 1, 3), (2, 2, 2), (3, 1, 2), (2, 2, 1), (3, 2, 1)])
def test_minimal_frontier_is_exact(parts, t, k):
    K = PartiteHost.complete(parts, t, 1, k)
    admissible = [a for a in product(range(k + 1), repeat=parts * t) if _is_admissible(K, a)]
    minimal = {a for a in admissible
               if not any(b != a and all(x <= y for x, y in zip(b, a)) for b in admissible)}
    assert set(minimal_attachments(K)) == minimal


def test_host_invariants():
    with pytest.raises(ValueError):
        PartiteHost(((0,), (1, 2)), MultiGraph.uniform(3, 0, 1), 1)
    w = MultiGraph.from_dict(4, 2, {(0, 1): 1})
    with pytest.raises(ValueError):
        PartiteHost(((0, 1), (2, 3)), w, 2)
    with pytest.raises(ValueError):
        PartiteHost.complete(2, 1, 5, 4)


def test_friendly_examples():
    assert is_h_friendly(host(4), K3).friendly
    rep = is_h_friendly(host(1), K3)
    assert not rep.friendly and rep.counterexample is not None
    # the (2,2) attachment gives capacities (1,2,2): fails at the third prefix
    assert has_rainbow_nested(K3, augment(host(1), (2, 2))) is None


def test_precondition_errors():
    with pytest.raises(ValueError):
        is_h_friendly(host(3, k=3), K3)  # k below 2(h-1) = 4
    with pytest.raises(ValueError):
        is_h_friendly(PartiteHost.complete(3, 1, 3, 4), K3)  # wrong number of parts
    bip = PatternMultigraph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        is_h_friendly(PartiteHost.complete(1, 1, 0, 4), bip)


def test_threshold_consistent_between_oracles():
    # K_3, t = 1, k = 4: sweep the cross multiplicity c
    verdicts = []
    for c in range(5):
        K = host(c)
        nested = is_h_friendly(K, K3).friendly
        general = all(has_rainbow_general(K3, from_multiplicity(augment(K, a), 4)) is not None
                      for a in minimal_attachments(K))
        assert nested == general
        verdicts.append(nested)
    assert verdicts == [False, False, False, True, True]


def test_monotone_closure_sampled():
    rng = random.Random(1)
    K = PartiteHost.complete(2, 2, 3, 4)
    for a in minimal_attachments(K):
        if has_rainbow_nested(K3, augment(K, a)) is None:
            continue
        for _ in range(3):
            b = tuple(min(4, x + rng.randint(0, 2)) for x in a)
            assert has_rainbow_nested(K3, augment(K, b)) is not None


def test_counterexample_certificate_sound():
    rep = is_h_friendly(host(1), K3)
    F = MultiGraph.from_dict(2, 4, {(0, 1): 1})
    plus = build_f_plus(F, rep.counterexample, 4)
    assert has_rainbow_general(K3, from_multiplicity(plus, 4)) is None


def test_build_f_plus():
    F = MultiGraph.uniform(3, 5, 5)
    plus = build_f_plus(F, (1, 5, 4), 5)
    assert plus.n == 4 and [plus.w(v, 3) for v in range(3)] == [1, 5, 4]
    with pytest.raises(ValueError):
        build_f_plus(F, (1, 1, 1), 5)
    with pytest.raises(ValueError):
        build_f_plus(F, (0, 5, 5), 5)


def test_probe():
    rep = kplus_friendly_probe(K3, 4)
    assert rep["friendly"] and rep["t"] == 1 and rep["multiplicity"] == 3
    rep = kplus_friendly_probe(REDUCED_C5, 8)
    assert rep["friendly"] and rep["evidence"] == "supporting"
    with pytest.raises(ValueError):
        kplus_friendly_probe(REDUCED_C5, 7)
    assert kplus_friendly_probe(cycle_pattern(5), 8)["t"] == 2
