"""Deciding whether a colored multigraph contains a multicolored copy of a pattern.

Two oracles:

* :func:`has_rainbow_nested` treats a multiplicity map as its nested coloring
  (pair of multiplicity c lies in colors 0..c-1).  Available colors are then
  prefixes, and Hall's condition collapses to a sorted prefix-sum test.
* :func:`has_rainbow_general` works on an arbitrary coloring and solves a
  bipartite matching between edge instances and colors per embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .colorings import (ColoredMultigraph, NestedColoredMultigraph, from_multiplicity,
                        multiplicity_profile)
from .graphs import MultiGraph, Pair, canon, pair_index


@dataclass(frozen=True)
class Embedding:
    phi: tuple[int, ...]
    # (pattern pair, host multiplicity of its image) for every pattern pair with w_H >= 1
    capacities: tuple[tuple[Pair, int], ...]

    def image(self, u: int, v: int) -> Pair:
        return canon(self.phi[u], self.phi[v])


@dataclass(frozen=True)
class RainbowWitness:
    embedding: Embedding
    # one entry per edge instance: (pattern pair, color index)
    assignment: tuple[tuple[Pair, int], ...]

    def to_json(self) -> dict:
        return {
            "embedding": list(self.embedding.phi),
            "colors": [[u, v, c] for (u, v), c in self.assignment],
        }


def _pattern_edges(H: MultiGraph) -> list[tuple[Pair, int]]:
    return [(p, x) for p, x in H.items() if x >= 1]


def enumerate_embeddings(H: MultiGraph, G: MultiGraph) -> Iterator[Embedding]:
    """Yield injections V(H) -> V(G) with w_G(phi(e)) >= w_H(e), lexicographically.

    Candidates whose weighted host degree is below the pattern degree are
    dropped up front; this never removes a feasible embedding.
    """
    r, n = H.n, G.n
    if r > n:
        return
    hdeg = H.degrees()
    gdeg = G.degrees()
    cand = [[x for x in range(n) if gdeg[x] >= hdeg[u]] for u in range(r)]
    # pattern neighbours already placed when u is placed
    back = [[(v, H.w(u, v)) for v in range(u) if H.w(u, v)] for u in range(r)]
    edges = _pattern_edges(H)
    phi = [-1] * r
    used = [False] * n

    def go(u: int):
        if u == r:
            caps = tuple((p, G.w(phi[p[0]], phi[p[1]])) for p, _ in edges)
            yield Embedding(tuple(phi), caps)
            return
        for x in cand[u]:
            if used[x]:
                continue
            if all(G.w(x, phi[v]) >= d for v, d in back[u]):
                phi[u] = x
                used[x] = True
                yield from go(u + 1)
                used[x] = False
        phi[u] = -1

    yield from go(0)


def hall_order(demands: Sequence[int], capacities: Sequence[int]) -> list[int]:
    """Indices sorted by ascending capacity, ties broken by larger demand first."""
    return sorted(range(len(demands)), key=lambda i: (capacities[i], -demands[i], i))


def hall_greedy_check(demands: Sequence[int], capacities: Sequence[int]) -> bool:
    """True iff some ordering satisfies capacity(f_i) >= demand(f_1) + ... + demand(f_i).

    Ascending capacity is optimal by an adjacent-swap exchange argument, so one
    sorted pass decides it.
    """
    if len(demands) != len(capacities):
        raise ValueError(f"length mismatch: {len(demands)} demands, {len(capacities)} capacities")
    if any(d < 0 for d in demands) or any(c < 0 for c in capacities):
        raise ValueError("demands and capacities must be non-negative")
    running = 0
    for i in hall_order(demands, capacities):
        running += demands[i]
        if running > capacities[i]:
            return False
    return True


def _nested_assignment(H: MultiGraph, emb: Embedding) -> tuple[tuple[Pair, int], ...]:
    demands = [H.w(*p) for p, _ in emb.capacities]
    caps = [c for _, c in emb.capacities]
    out = []
    nxt = 0
    for i in hall_order(demands, caps):
        p = emb.capacities[i][0]
        for _ in range(demands[i]):
            out.append((p, nxt))
            nxt += 1
    return tuple(out)


def has_rainbow_nested(H: MultiGraph, G: MultiGraph) -> RainbowWitness | None:
    """Witness for a multicolored H in the nested coloring of G, or None.

    Color c (0-based) holds the pairs of multiplicity > c, so each host pair
    owns the color prefix 0..w-1 and a witness hands colors out in
    ascending-capacity order.
    """
    for emb in enumerate_embeddings(H, G):
        demands = [H.w(*p) for p, _ in emb.capacities]
        if hall_greedy_check(demands, [c for _, c in emb.capacities]):
            return RainbowWitness(emb, _nested_assignment(H, emb))
    return None


def _match_instances(avail: list[list[int]]) -> list[int] | None:
    """Augmenting-path bipartite matching; returns a color per instance or None."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set) -> bool:
        for c in avail[i]:
            if c in seen:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = i
                return True
        return False

    for i in range(len(avail)):
        if not augment(i, set()):
            return None
    out = [-1] * len(avail)
    for c, i in owner.items():
        out[i] = c
    return out


def has_rainbow_general(H: MultiGraph, G: ColoredMultigraph) -> RainbowWitness | None:
    profile = multiplicity_profile(G)
    edges = _pattern_edges(H)
    for emb in enumerate_embeddings(H, profile):
        instances: list[Pair] = []
        avail: list[list[int]] = []
        for p, d in edges:
            cols = G.colors_of(*emb.image(*p))
            for _ in range(d):
                instances.append(p)
                avail.append(cols)
        match = _match_instances(avail)
        if match is not None:
            return RainbowWitness(emb, tuple(zip(instances, match)))
    return None


def has_rainbow(H: MultiGraph, G) -> RainbowWitness | None:
    """Dispatch on the host representation.

    Multiplicity maps and chain colorings use the exact greedy test; any other
    coloring goes through matching.
    """
    if isinstance(G, NestedColoredMultigraph):
        w = has_rainbow_nested(H, multiplicity_profile(G))
        if w is None:
            return None
        # translate level indices back to the chain's own color labels
        order = list(reversed(G.perm))
        return RainbowWitness(w.embedding, tuple((p, order[c]) for p, c in w.assignment))
    if isinstance(G, ColoredMultigraph):
        return has_rainbow_general(H, G)
    return has_rainbow_nested(H, G)


def is_multicolored_free(H: MultiGraph, G) -> bool:
    return has_rainbow(H, G) is None


def validate_witness(H: MultiGraph, G, witness: RainbowWitness) -> bool:
    """Independent re-check: injective, capacities, distinct colors, membership."""
    phi = witness.embedding.phi
    if len(phi) != H.n or len(set(phi)) != len(phi):
        return False
    if isinstance(G, ColoredMultigraph):
        colored = G
    else:
        colored = from_multiplicity(G, G.k_cap)
    if any(not 0 <= x < colored.n for x in phi):
        return False
    colors = [c for _, c in witness.assignment]
    if len(set(colors)) != len(colors):
        return False
    need = {p: x for p, x in H.items() if x}
    got: dict = {}
    for p, c in witness.assignment:
        if not 0 <= c < colored.k:
            return False
        if not colored.colors[c].has_edge(phi[p[0]], phi[p[1]]):
            return False
        got[p] = got.get(p, 0) + 1
    return got == need


def rainbow_capacity_lists(H: MultiGraph, n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Distinct (host pair indices, demands) images of H over all injections into K_n.

    Used by the solver: H is rainbow in the nested coloring of w iff some
    image passes the greedy check with capacities w[pairs].
    """
    edges = _pattern_edges(H)
    seen = set()
    out = []
    if H.n > n:
        return out
    for phi in permutations(range(n), H.n):
        items = tuple(sorted((pair_index(phi[u], phi[v], n), d) for (u, v), d in edges))
        if items in seen:
            continue
        seen.add(items)
        out.append((tuple(i for i, _ in items), tuple(d for _, d in items)))
    return out

