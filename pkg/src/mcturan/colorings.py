"""Simple k-colorings and their nested (chain) canonical form."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import MultiGraph, SimpleGraph, all_pairs, pair_index, turan_graph


@dataclass(frozen=True)
class ColoredMultigraph:
    n: int
    colors: tuple[SimpleGraph, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        for c in colors:
            if c.n != self.n:
                raise ValueError(f"color on {c.n} vertices, expected {self.n}")
        object.__setattr__(self, "colors", colors)

    @property
    def k(self) -> int:
        return len(self.colors)

    @property
    def total(self) -> int:
        return sum(c.m for c in self.colors)

    def colors_of(self, u: int, v: int) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c.has_edge(u, v)]

    def canonical_colors(self) -> tuple[SimpleGraph, ...]:
        """Colors sorted by size (descending), then by edge list; empty colors last."""
        return tuple(sorted(self.colors, key=lambda c: (-c.m, sorted(c.edges))))


def is_chain(colors) -> bool:
    ordered = sorted(colors, key=lambda c: c.m)
    return all(a.edges <= b.edges for a, b in zip(ordered, ordered[1:]))


@dataclass(frozen=True)
class NestedColoredMultigraph(ColoredMultigraph):
    """A coloring whose colors form a chain; ``perm`` lists color indices from
    the smallest class to the largest, so colors[perm[0]] ⊆ colors[perm[1]] ⊆ ..."""

    perm: tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        perm = tuple(self.perm) if self.perm else tuple(
            sorted(range(len(self.colors)), key=lambda i: (self.colors[i].m, -i)))
        if sorted(perm) != list(range(len(self.colors))):
            raise ValueError("perm is not a permutation of the colors")
        for a, b in zip(perm, perm[1:]):
            if not self.colors[a].edges <= self.colors[b].edges:
                raise ValueError("colors do not form a chain under inclusion")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def from_colored(cls, G: ColoredMultigraph) -> "NestedColoredMultigraph":
        return cls(G.n, G.colors)


def multiplicity_profile(G: ColoredMultigraph) -> MultiGraph:
    mult = [0] * comb(G.n, 2)
    for c in G.colors:
        for u, v in c.edges:
            mult[pair_index(u, v, G.n)] += 1
    return MultiGraph(G.n, G.k, tuple(mult))


def _levels(w: MultiGraph, k: int) -> tuple[SimpleGraph, ...]:
    pairs = all_pairs(w.n)
    return tuple(
        SimpleGraph(w.n, frozenset(p for p, x in zip(pairs, w.mult) if x >= i))
        for i in range(1, k + 1)
    )


def nest(G: ColoredMultigraph) -> NestedColoredMultigraph:
    """Replace the colors by the level sets L_i = {e : w(e) >= i}, i = 1..k.

    The multiplicity of every pair is unchanged, so the edge multiset is
    preserved; the levels satisfy L_k ⊆ ... ⊆ L_1.
    """
    return from_multiplicity(multiplicity_profile(G), G.k)


def from_multiplicity(w: MultiGraph, k: int) -> NestedColoredMultigraph:
    if w.max_multiplicity() > k:
        raise ValueError(f"multiplicity {w.max_multiplicity()} exceeds k={k}")
    levels = _levels(w, k)
    return NestedColoredMultigraph(w.n, levels, tuple(range(k - 1, -1, -1)))


def construct_candidate_i(n: int, h: int, k: int) -> ColoredMultigraph:
    """h-1 colors equal to K_n, the remaining k-(h-1) colors empty."""
    if h < 1:
        raise ValueError("h must be >= 1")
    if k < h - 1:
        raise ValueError(f"need k >= h-1, got k={k}, h={h}")
    full = SimpleGraph.complete(n)
    empty = SimpleGraph.empty(n)
    return NestedColoredMultigraph(n, (full,) * (h - 1) + (empty,) * (k - h + 1))


def construct_candidate_ii(n: int, r: int, k: int) -> ColoredMultigraph:
    """k identical copies of the Turán graph T_{r-1}(n)."""
    if not 2 <= r - 1 <= n:
        raise ValueError(f"need 2 <= r-1 <= n, got r={r}, n={n}")
    if k < 0:
        raise ValueError("k must be >= 0")
    T = turan_graph(n, r - 1)
    return NestedColoredMultigraph(n, (T,) * k)
