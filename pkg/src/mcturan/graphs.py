"""Simple graphs, multiplicity maps, forbidden patterns and their chromatic data.

Vertices are dense integers ``0..n-1``.  Unordered pairs are canonicalised as
``(min, max)`` and multiplicities live in flat triangular storage indexed by
:func:`pair_index`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator, Sequence

Pair = tuple[int, int]

CHROMATIC_SIZE_CAP = 16


class SizeLimitError(RuntimeError):
    """Raised when an exact search would exceed its configured size cap.

    ``best`` carries whatever bound was reached before giving up (may be None).
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class ContractViolation(ValueError):
    pass


def canon(u: int, v: int) -> Pair:
    if u == v:
        raise ValueError(f"self-pair ({u}, {v})")
    return (u, v) if u < v else (v, u)


def pair_index(u: int, v: int, n: int) -> int:
    """Position of the pair uv in lexicographic order of ``combinations(range(n), 2)``."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def all_pairs(n: int) -> list[Pair]:
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = frozenset(canon(u, v) for u, v in self.edges)
        for u, v in norm:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "edges", norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self.edges

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nb = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def remove_edge(self, u: int, v: int) -> "SimpleGraph":
        return SimpleGraph(self.n, self.edges - {canon(u, v)})

    def complement(self) -> "SimpleGraph":
        return SimpleGraph(self.n, frozenset(all_pairs(self.n)) - self.edges)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        return SimpleGraph(self.n, frozenset(canon(perm[u], perm[v]) for u, v in self.edges))

    def pad(self, n: int) -> "SimpleGraph":
        """Add isolated vertices up to ``n`` in total."""
        if n < self.n:
            raise ValueError("cannot pad to fewer vertices")
        return SimpleGraph(n, self.edges)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(all_pairs(n)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(canon(i, (i + 1) % n) for i in range(n)))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset())


@dataclass(frozen=True)
class MultiGraph:
    """Multiplicity map on the pairs of ``n`` vertices, each value in ``[0, k_cap]``."""

    n: int
    k_cap: int
    mult: tuple[int, ...]

    def __post_init__(self):
        mult = tuple(int(x) for x in self.mult)
        if len(mult) != comb(self.n, 2):
            raise ValueError(f"expected {comb(self.n, 2)} multiplicities, got {len(mult)}")
        for x in mult:
            if x < 0 or x > self.k_cap:
                raise ValueError(f"multiplicity {x} outside [0, {self.k_cap}]")
        object.__setattr__(self, "mult", mult)

    @classmethod
    def from_dict(cls, n: int, k_cap: int, w: dict) -> "MultiGraph":
        mult = [0] * comb(n, 2)
        for (u, v), x in w.items():
            mult[pair_index(u, v, n)] += x
        return cls(n, k_cap, tuple(mult))

    @classmethod
    def uniform(cls, n: int, value: int, k_cap: int | None = None) -> "MultiGraph":
        return cls(n, value if k_cap is None else k_cap, (value,) * comb(n, 2))

    @classmethod
    def from_simple(cls, g: SimpleGraph, value: int = 1, k_cap: int | None = None) -> "MultiGraph":
        mult = [0] * comb(g.n, 2)
        for u, v in g.edges:
            mult[pair_index(u, v, g.n)] = value
        return cls(g.n, value if k_cap is None else k_cap, tuple(mult))

    def w(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self.mult[pair_index(u, v, self.n)]

    def items(self) -> Iterator[tuple[Pair, int]]:
        return zip(combinations(range(self.n), 2), self.mult)

    def as_dict(self) -> dict:
        return {p: x for p, x in self.items() if x}

    @property
    def total(self) -> int:
        """e(G): the number of edges counted with multiplicity."""
        return sum(self.mult)

    def weight(self, pairs: Iterable[Pair]) -> int:
        return sum(self.w(u, v) for u, v in pairs)

    def degree(self, v: int, within: Iterable[int] | None = None) -> int:
        others = range(self.n) if within is None else within
        return sum(self.w(v, u) for u in others if u != v)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for (u, v), x in self.items():
            deg[u] += x
            deg[v] += x
        return deg

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def max_multiplicity(self) -> int:
        return max(self.mult, default=0)

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset(p for p, x in self.items() if x >= 1))

    def with_pair(self, u: int, v: int, value: int) -> "MultiGraph":
        mult = list(self.mult)
        mult[pair_index(u, v, self.n)] = value
        return MultiGraph(self.n, self.k_cap, tuple(mult))

    def with_cap(self, k_cap: int) -> "MultiGraph":
        return MultiGraph(self.n, k_cap, self.mult)

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        mult = [0] * len(self.mult)
        for (u, v), x in self.items():
            mult[pair_index(perm[u], perm[v], self.n)] = x
        return MultiGraph(self.n, self.k_cap, tuple(mult))

    def canonical_form(self) -> tuple[int, ...]:
        """Lexicographically smallest multiplicity tuple over all vertex relabelings."""
        return canonical_mult(self.n, self.mult)


def canonical_mult(n: int, mult: Sequence[int]) -> tuple[int, ...]:
    pairs = all_pairs(n)
    best = None
    for perm in permutations(range(n)):
        # position of the pair (perm[u], perm[v]) in the relabeled tuple
        cand = [0] * len(mult)
        for idx, (u, v) in enumerate(pairs):
            cand[pair_index(perm[u], perm[v], n)] = mult[idx]
        t = tuple(cand)
        if best is None or t < best:
            best = t
    return best if best is not None else ()


@dataclass(frozen=True)
class PatternMultigraph(MultiGraph):
    """The forbidden multigraph H together with its chromatic metadata."""

    name: str = ""

    @property
    def r_vertices(self) -> int:
        return self.n

    @property
    def h(self) -> int:
        return self.total

    @cached_property
    def chi(self) -> int:
        return chromatic_number(self.underlying())

    @cached_property
    def critical_edges(self) -> list[Pair]:
        return critical_edges(self)

    @property
    def is_color_critical(self) -> bool:
        return bool(self.critical_edges)

    def isolated_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees()) if d == 0]

    @classmethod
    def from_multigraph(cls, g: MultiGraph, name: str = "") -> "PatternMultigraph":
        return cls(g.n, max(g.k_cap, g.max_multiplicity()), g.mult, name)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, name: str = "") -> "PatternMultigraph":
        """Edges given as ``(u, v)`` or ``(u, v, mult)``."""
        w: dict = {}
        for e in edges:
            u, v = e[0], e[1]
            x = e[2] if len(e) > 2 else 1
            p = canon(u, v)
            w[p] = w.get(p, 0) + x
        cap = max(w.values(), default=0)
        return cls.from_multigraph(MultiGraph.from_dict(n, cap, w), name)

    @classmethod
    def from_simple(cls, g: SimpleGraph, value: int = 1, k_cap: int | None = None,
                    name: str = "") -> "PatternMultigraph":
        return cls.from_multigraph(MultiGraph.from_simple(g, value, k_cap), name)


def clique_pattern(r: int) -> PatternMultigraph:
    return PatternMultigraph.from_simple(SimpleGraph.complete(r), name=f"K{r}")


def cycle_pattern(n: int) -> PatternMultigraph:
    return PatternMultigraph.from_simple(SimpleGraph.cycle(n), name=f"C{n}")


# ---------------------------------------------------------------- Turán graphs

def _check_parts(n: int, parts: int):
    if parts < 1 or parts > n:
        raise ValueError(f"need 1 <= parts <= n, got parts={parts}, n={n}")


def turan_part_sizes(n: int, parts: int) -> list[int]:
    _check_parts(n, parts)
    q, rem = divmod(n, parts)
    return [q + 1] * rem + [q] * (parts - rem)


def turan_partition(n: int, parts: int) -> list[list[int]]:
    out, start = [], 0
    for size in turan_part_sizes(n, parts):
        out.append(list(range(start, start + size)))
        start += size
    return out


def turan_graph(n: int, parts: int) -> SimpleGraph:
    """Complete ``parts``-partite graph on ``n`` vertices with balanced parts."""
    label = {}
    for i, block in enumerate(turan_partition(n, parts)):
        for v in block:
            label[v] = i
    return SimpleGraph(n, frozenset((u, v) for u, v in all_pairs(n) if label[u] != label[v]))


def turan_count(n: int, parts: int) -> int:
    sizes = turan_part_sizes(n, parts)
    return (n * n - sum(s * s for s in sizes)) // 2


def turan_estimates(n: int, r: int) -> dict:
    """Exact rational sandwich bounds for t_{r-1}(n) and the minimum degree of T_{r-1}(n)."""
    if r < 2 or n < r:
        raise ValueError("need n >= r >= 2")
    ratio = Fraction(r - 2, r - 1)
    t = turan_count(n, r - 1)
    delta = turan_graph(n, r - 1).min_degree()
    return {
        "edges": t,
        "edges_lower": ratio * comb(n, 2),
        "edges_upper": ratio * Fraction(n * n, 2),
        "min_degree": delta,
        "min_degree_lower": ratio * (n - 1),
        "min_degree_upper": ratio * n,
    }


# ---------------------------------------------------------- chromatic number

def _greedy_colors(n: int, adj, order) -> int:
    color = [-1] * n
    for v in order:
        used = {color[u] for u in adj[v] if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return max(color, default=-1) + 1


def _max_clique(adj, cand: set, size: int, best: int) -> int:
    if not cand:
        return max(size, best)
    for v in sorted(cand):
        if size + len(cand) <= best:
            break
        best = _max_clique(adj, cand & adj[v], size + 1, best)
        cand = cand - {v}
    return best


def _colorable(n: int, adj, order, k: int) -> bool:
    color = [-1] * n

    def go(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = {color[u] for u in adj[v]}
        # a fresh color is only ever tried once (symmetry breaking)
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if go(i + 1, max(used, c + 1)):
                    return True
                color[v] = -1
        return False

    return go(0, 0)


def chromatic_number(g: SimpleGraph, cap: int = CHROMATIC_SIZE_CAP) -> int:
    if g.n > cap:
        raise SizeLimitError(f"chromatic_number: n={g.n} exceeds cap {cap}")
    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    adj = g.adj
    order = sorted(range(g.n), key=lambda v: (-len(adj[v]), v))
    upper = _greedy_colors(g.n, adj, order)
    lower = _max_clique(adj, set(range(g.n)), 0, 0)
    for k in range(lower, upper):
        if _colorable(g.n, adj, order, k):
            return k
    return upper


def critical_edges(H: MultiGraph) -> list[Pair]:
    """Pairs with positive multiplicity whose deletion lowers the chromatic number."""
    und = H.underlying()
    chi = chromatic_number(und)
    return sorted(e for e in und.edges if chromatic_number(und.remove_edge(*e)) < chi)


# ---------------------------------------------------- critical colorings

@dataclass(frozen=True)
class CriticalColoring:
    classes: tuple[tuple[int, ...], ...]
    witness_pairs: tuple[Pair, ...]

    @property
    def witness_pair(self) -> Pair:
        return self.witness_pairs[0]

    @property
    def r(self) -> int:
        return len(self.classes)


def cross_weight(H: MultiGraph, A: Iterable[int], B: Iterable[int]) -> int:
    B = list(B)
    return sum(H.w(a, b) for a in A for b in B)


def _partitions(n: int, r: int) -> Iterator[list[int]]:
    """Restricted growth strings: set partitions of range(n) into exactly r blocks."""
    labels = [0] * n

    def go(i: int, used: int):
        if n - i < r - used:
            return
        if i == n:
            if used == r:
                yield list(labels)
            return
        for c in range(min(used + 1, r)):
            labels[i] = c
            yield from go(i + 1, max(used, c + 1))

    if n == 0:
        return
    labels[0] = 0
    yield from go(1, 1)


def critical_colorings(H: MultiGraph, cap: int = CHROMATIC_SIZE_CAP) -> list[CriticalColoring]:
    if H.n > cap:
        raise SizeLimitError(f"critical_colorings: n={H.n} exceeds cap {cap}")
    und = H.underlying()
    r = chromatic_number(und)
    if r < 3:
        raise ValueError(f"critical colorings need chromatic number >= 3, got {r}")
    out = []
    for labels in _partitions(H.n, r):
        if any(labels[u] == labels[v] for u, v in und.edges):
            continue
        classes = tuple(tuple(v for v in range(H.n) if labels[v] == c) for c in range(r))
        wit = tuple((i, j) for i, j in combinations(range(r), 2)
                    if cross_weight(H, classes[i], classes[j]) == 1)
        if wit:
            out.append(CriticalColoring(classes, wit))
    return out


def color_reduce(H: MultiGraph, c: CriticalColoring) -> PatternMultigraph:
    """Collapse each color class to a vertex; w(ij) = e(V_i, V_j)."""
    seen = sorted(v for cls in c.classes for v in cls)
    if seen != list(range(H.n)):
        raise ContractViolation("classes do not partition the vertex set")
    if any(len(cls) == 0 for cls in c.classes):
        raise ContractViolation("empty color class")
    for cls in c.classes:
        for u, v in combinations(cls, 2):
            if H.w(u, v):
                raise ContractViolation(f"class {cls} is not independent (pair {u}{v})")
    r = len(c.classes)
    w = {(i, j): cross_weight(H, c.classes[i], c.classes[j]) for i, j in combinations(range(r), 2)}
    if not any(x == 1 for x in w.values()):
        raise ContractViolation("no pair of classes spans exactly one edge")
    for i, j in c.witness_pairs:
        if w[canon(i, j)] != 1:
            raise ContractViolation(f"witness pair {(i, j)} spans {w[canon(i, j)]} edges")
    g = MultiGraph.from_dict(r, max(w.values(), default=0), w)
    name = f"{getattr(H, 'name', '')}_c" if getattr(H, "name", "") else ""
    return PatternMultigraph.from_multigraph(g, name)


# ----------------------------------------------------- r-vertex pattern check

@dataclass
class PatternReport:
    ok: bool
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failures": self.failures}


def validate_pattern(H: MultiGraph) -> PatternReport:
    """Check the three counting consequences for an r-vertex r-color-critical H.

    (i) every pair has multiplicity >= 1; (ii) any j pairs carry at most
    h - (C(r,2) - j) edges; (iii) every degree is at most h - C(r-1, 2).
    Item (ii) is checked against the heaviest j pairs, which is exact.
    """
    r, h = H.n, H.total
    failures = []
    zeros = [p for p, x in H.items() if x < 1]
    if zeros:
        failures.append({"item": "positive", "witness": [list(p) for p in zeros]})
    ranked = sorted(H.items(), key=lambda px: (-px[1], px[0]))
    running = 0
    for j, (p, x) in enumerate(ranked, start=1):
        running += x
        if running > h - (comb(r, 2) - j):
            failures.append({"item": "subset_weight", "size": j,
                             "witness": [list(q) for q, _ in ranked[:j]],
                             "weight": running, "bound": h - (comb(r, 2) - j)})
            break
    bound = h - comb(r - 1, 2)
    for v, d in enumerate(H.degrees()):
        if d > bound:
            failures.append({"item": "degree", "vertex": v, "degree": d, "bound": bound})
            break
    return PatternReport(not failures, failures)
