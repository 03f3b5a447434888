"""Packing two equal-order graphs: a bijection sending edges of G to non-edges of H."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb

from .graphs import SimpleGraph, all_pairs, canon


@dataclass(frozen=True)
class PackingBijection:
    sigma: tuple[int, ...]


def _same_order(G: SimpleGraph, H: SimpleGraph):
    if G.n != H.n:
        raise ValueError(f"vertex-count mismatch: {G.n} vs {H.n}")


def is_packing(G: SimpleGraph, H: SimpleGraph, sigma) -> bool:
    if sorted(sigma) != list(range(G.n)):
        return False
    return all(not H.has_edge(sigma[u], sigma[v]) for u, v in G.edges)


def find_packing(G: SimpleGraph, H: SimpleGraph) -> PackingBijection | None:
    """Backtracking with forward checking.

    G-vertices are placed in descending degree order; images are tried in
    ascending H-degree order.  Each placement removes the H-neighbourhood of
    the image from the domains of the vertex's unplaced G-neighbours.
    """
    _same_order(G, H)
    n = G.n
    gadj, hadj = G.adj, H.adj
    order = sorted(range(n), key=lambda v: (-len(gadj[v]), v))
    images = sorted(range(n), key=lambda x: (len(hadj[x]), x))
    domain = [set(range(n)) for _ in range(n)]
    sigma = [-1] * n
    taken = [False] * n

    def go(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        for x in images:
            if taken[x] or x not in domain[u]:
                continue
            sigma[u] = x
            taken[x] = True
            pruned = []
            dead = False
            for v in gadj[u]:
                if sigma[v] >= 0:
                    continue
                cut = domain[v] & hadj[x]
                if cut:
                    domain[v] -= cut
                    pruned.append((v, cut))
                if not domain[v]:
                    dead = True
                    break
            if not dead and go(i + 1):
                return True
            for v, cut in pruned:
                domain[v] |= cut
            sigma[u] = -1
            taken[x] = False
        return False

    if go(0):
        return PackingBijection(tuple(sigma))
    return None


def find_packing_bruteforce(G: SimpleGraph, H: SimpleGraph) -> PackingBijection | None:
    _same_order(G, H)
    for perm in permutations(range(G.n)):
        if is_packing(G, H, perm):
            return PackingBijection(perm)
    return None


def sauer_spencer_product_applies(G: SimpleGraph, H: SimpleGraph) -> bool:
    """e(G)·e(H) < C(n, 2)."""
    _same_order(G, H)
    return G.m * H.m < comb(G.n, 2)


def sum_bound_applies(G: SimpleGraph, H: SimpleGraph) -> bool:
    """e(G) + e(H) <= 3(n-1)/2, compared exactly."""
    _same_order(G, H)
    return G.m + H.m <= Fraction(3 * (G.n - 1), 2)


def product_bound_holds(m1: int, m2: int, n: int) -> bool:
    return m1 * m2 < comb(n, 2)


def sum_bound_holds(m1: int, m2: int, n: int) -> bool:
    return m1 + m2 <= Fraction(3 * (n - 1), 2)


# ------------------------------------------------------------ graph corpora

def graph_canonical_key(g: SimpleGraph) -> tuple:
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(canon(perm[u], perm[v]) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def nonisomorphic_graphs(n: int) -> list[SimpleGraph]:
    """All graphs on n vertices up to isomorphism (brute force; intended for n <= 5)."""
    pairs = all_pairs(n)
    seen = {}
    for mask in range(1 << len(pairs)):
        g = SimpleGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
        seen.setdefault(graph_canonical_key(g), g)
    return sorted(seen.values(), key=lambda g: (g.m, sorted(g.edges)))


def random_graph_with_edges(n: int, m: int, rng: random.Random) -> SimpleGraph:
    return SimpleGraph(n, frozenset(rng.sample(all_pairs(n), m)))


@dataclass
class PackingReport:
    n_max: int
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    by_n: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {"n_max": self.n_max, "checked": self.checked, "ok": self.ok,
                "counterexamples": self.counterexamples, "by_n": self.by_n}


def verify_packing_theorems(n_max: int, exhaustive_max: int = 5, samples: int = 10_000,
                            seed: int = 0) -> PackingReport:
    """Check that every pair meeting the product or the sum hypothesis packs.

    Orders up to ``exhaustive_max`` cover all pairs of non-isomorphic graphs;
    larger orders draw ``samples`` random pairs per order, with edge counts
    chosen uniformly among those meeting a hypothesis.
    """
    rep = PackingReport(n_max)
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        tally = {"pairs": 0, "product": 0, "sum": 0, "mode": ""}
        if n <= exhaustive_max:
            tally["mode"] = "exhaustive"
            corpus = nonisomorphic_graphs(n)
            jobs = ((G, H) for G in corpus for H in corpus)
        else:
            tally["mode"] = "sampled"
            counts = [(a, b) for a in range(comb(n, 2) + 1) for b in range(comb(n, 2) + 1)
                      if product_bound_holds(a, b, n) or sum_bound_holds(a, b, n)]
            jobs = ((random_graph_with_edges(n, a, rng), random_graph_with_edges(n, b, rng))
                    for a, b in (rng.choice(counts) for _ in range(samples)))
        for G, H in jobs:
            prod, summ = sauer_spencer_product_applies(G, H), sum_bound_applies(G, H)
            if not (prod or summ):
                continue
            tally["pairs"] += 1
            tally["product"] += prod
            tally["sum"] += summ
            rep.checked += 1
            sigma = find_packing(G, H)
            if sigma is None or not is_packing(G, H, sigma.sigma):
                rep.counterexamples.append({"n": n, "G": sorted(G.edges), "H": sorted(H.edges)})
        rep.by_n[n] = tally
    return rep


def edge_sets_disjoint(G: SimpleGraph, H: SimpleGraph, sigma) -> bool:
    mapped = {canon(sigma[u], sigma[v]) for u, v in G.edges}
    return not (mapped & H.edges)



def pad(G: SimpleGraph, n: int) -> SimpleGraph:
    """G plus isolated vertices up to order n."""
    return G.pad(n)
