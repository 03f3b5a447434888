from mcturan.cache import ResultCache, pattern_hash, result_from_record
from mcturan.graphs import PatternMultigraph, clique_pattern
from mcturan.solver import ExkInstance, exk_branch_and_bound

K3 = clique_pattern(3)


def test_hash_ignores_labelling():
    a = PatternMultigraph.from_edges(3, [(0, 1, 3), (1, 2), (0, 2)])
    b = PatternMultigraph.from_edges(3, [(1, 2, 3), (0, 1), (0, 2)])
    assert pattern_hash(a) == pattern_hash(b)
    assert pattern_hash(a) != pattern_hash(K3)


def test_exact_not_overwritten(tmp_path):
    cache = ResultCache(tmp_path)
    exact = exk_branch_and_bound(ExkInstance(4, 4, K3))
    bounded = exk_branch_and_bound(ExkInstance(4, 4, K3), budget=3)
    assert bounded.status == "bounded"
    assert cache.put(K3, bounded)
    assert cache.lookup(4, 4, K3)["status"] == "bounded"
    assert cache.put(K3, exact)
    assert not cache.put(K3, bounded)
    assert not cache.put(K3, exact)
    rec = cache.lookup(4, 4, K3)
    assert rec["status"] == "exact" and rec["value"] == 16
    assert len(cache.path.read_text().splitlines()) == 2


def test_replay_identical(tmp_path):
    cache = ResultCache(tmp_path)
    fresh = exk_branch_and_bound(ExkInstance(4, 3, K3))
    cache.put(K3, fresh, "test")
    back = result_from_record(cache.lookup(4, 3, K3))
    a, b = fresh.to_dict(), back.to_dict()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b
    assert cache.lookup(5, 3, K3) is None
