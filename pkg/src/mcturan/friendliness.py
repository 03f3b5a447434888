"""H-friendliness of a balanced (r-1)-partite multigraph.

K is H-friendly when every way of attaching a new vertex v, with edge
multiplicities at most k, total degree at least (r-2)tk and at least one edge
into each part, produces a multicolored H.  Rainbow existence is monotone in
the multiplicities, so only the componentwise-minimal attachments need to be
tried; those are enumerated exactly by :func:`minimal_attachments`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .graphs import MultiGraph, PatternMultigraph, critical_colorings, pair_index
from .rainbow import has_rainbow_nested


@dataclass(frozen=True)
class PartiteHost:
    parts: tuple[tuple[int, ...], ...]
    w: MultiGraph
    k: int

    def __post_init__(self):
        parts = tuple(tuple(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        sizes = {len(p) for p in parts}
        if len(sizes) > 1:
            raise ValueError(f"parts must have equal size, got sizes {sorted(sizes)}")
        flat = sorted(v for p in parts for v in p)
        if flat != list(range(self.w.n)):
            raise ValueError("parts must partition the host vertex set")
        for p in parts:
            for u, v in combinations(p, 2):
                if self.w.w(u, v):
                    raise ValueError(f"pair {u}{v} inside a part has positive multiplicity")
        if self.w.max_multiplicity() > self.k:
            raise ValueError(f"host multiplicity exceeds k={self.k}")

    @property
    def t(self) -> int:
        return len(self.parts[0]) if self.parts else 0

    @property
    def r(self) -> int:
        """The chromatic number this host is built for: number of parts + 1."""
        return len(self.parts) + 1

    @property
    def required_degree(self) -> int:
        return (self.r - 2) * self.t * self.k

    @classmethod
    def complete(cls, num_parts: int, t: int, value: int, k: int) -> "PartiteHost":
        """Complete balanced multipartite host with every cross pair at ``value``."""
        n = num_parts * t
        parts = tuple(tuple(range(i * t, (i + 1) * t)) for i in range(num_parts))
        label = {v: i for i, p in enumerate(parts) for v in p}
        mult = tuple(value if label[u] != label[v] else 0 for u, v in combinations(range(n), 2))
        return cls(parts, MultiGraph(n, k, mult), k)

    @classmethod
    def from_multigraph(cls, w: MultiGraph, num_parts: int, k: int) -> "PartiteHost":
        """Parts are consecutive vertex blocks of equal size."""
        if num_parts < 1 or w.n % num_parts:
            raise ValueError(f"{w.n} vertices cannot form {num_parts} equal parts")
        t = w.n // num_parts
        parts = tuple(tuple(range(i * t, (i + 1) * t)) for i in range(num_parts))
        return cls(parts, w.with_cap(max(k, w.k_cap)), k)


Attachment = tuple[int, ...]


def _frontier_total(K: PartiteHost) -> tuple[int, bool]:
    """(exact total of a minimal attachment, degenerate flag)."""
    need = K.required_degree
    if need >= len(K.parts):
        return need, False
    return len(K.parts), True


def minimal_attachments(K: PartiteHost) -> Iterator[Attachment]:
    """Componentwise-minimal attachment vectors, one entry per host vertex.

    When (r-2)tk >= r-1 these are exactly the vectors with entries in [0, k],
    every part sum >= 1, and total (r-2)tk.  Otherwise the part constraints
    dominate and the minimal vectors put a single 1 in each part.
    """
    total, degenerate = _frontier_total(K)
    if K.k < 1 or K.t < 1:
        return
    part_of = {v: i for i, p in enumerate(K.parts) for v in p}
    n = K.w.n
    if degenerate:
        def ones(i: int, acc: list):
            if i == len(K.parts):
                a = [0] * n
                for v in acc:
                    a[v] = 1
                yield tuple(a)
                return
            for v in K.parts[i]:
                yield from ones(i + 1, acc + [v])

        yield from ones(0, [])
        return
    last_in_part = {p[-1] for p in K.parts}
    a = [0] * n
    psum = [0] * len(K.parts)

    def go(v: int, left: int):
        if v == n:
            if left == 0:
                yield tuple(a)
            return
        if left > K.k * (n - v):
            return
        i = part_of[v]
        lo = 1 if v in last_in_part and psum[i] == 0 else 0
        for x in range(lo, min(K.k, left) + 1):
            a[v] = x
            psum[i] += x
            yield from go(v + 1, left - x)
            psum[i] -= x
        a[v] = 0

    yield from go(0, total)


def augment(K: PartiteHost, a: Attachment) -> MultiGraph:
    """K plus a new last vertex joined to host vertex v with multiplicity a[v]."""
    n = K.w.n
    if len(a) != n:
        raise ValueError(f"attachment has {len(a)} entries, host has {n} vertices")
    m = n + 1
    mult = [0] * (m * (m - 1) // 2)
    for (u, v), x in K.w.items():
        mult[pair_index(u, v, m)] = x
    for v, x in enumerate(a):
        mult[pair_index(v, n, m)] = x
    return MultiGraph(m, K.k, tuple(mult))


@dataclass
class FriendlinessReport:
    friendly: bool
    vacuous: bool = False
    degenerate: bool = False
    checked: int = 0
    counterexample: Attachment | None = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "friendly": self.friendly, "vacuous": self.vacuous, "degenerate": self.degenerate,
            "checked": self.checked,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "notes": self.notes,
        }


def in_friendly_range(k: int, r: int, h: int) -> bool:
    """k >= (r-1)/(r-2)·(h-1), compared exactly."""
    return Fraction(k) >= Fraction(r - 1, r - 2) * (h - 1)


def _check_pattern(K: PartiteHost, H: PatternMultigraph):
    r = H.chi
    if r < 3:
        raise ValueError(f"pattern must have chromatic number >= 3, got {r}")
    if not H.critical_edges:
        raise ValueError("pattern is not color-critical")
    if K.r != r:
        raise ValueError(f"host has {len(K.parts)} parts, pattern needs {r - 1}")
    if not in_friendly_range(K.k, r, H.h):
        raise ValueError(f"k={K.k} below (r-1)/(r-2)(h-1) = {Fraction(r - 1, r - 2) * (H.h - 1)}")


def is_h_friendly(K: PartiteHost, H: PatternMultigraph) -> FriendlinessReport:
    _check_pattern(K, H)
    _, degenerate = _frontier_total(K)
    rep = FriendlinessReport(friendly=True, degenerate=degenerate)
    if degenerate:
        rep.notes.append("(r-2)tk < r-1: frontier taken on the part-sum constraints")
    for a in minimal_attachments(K):
        rep.checked += 1
        if has_rainbow_nested(H, augment(K, a)) is None:
            rep.friendly = False
            rep.counterexample = a
            return rep
    if rep.checked == 0:
        rep.vacuous = True
        rep.notes.append("no admissible attachment: friendly vacuously")
    return rep


def build_f_plus(F: MultiGraph, attachment, k: int) -> MultiGraph:
    """Add vertex v_r to an (r-1)-vertex F with the given edge multiplicities."""
    r = F.n + 1
    a = tuple(attachment)
    if len(a) != F.n:
        raise ValueError(f"attachment needs {F.n} entries, got {len(a)}")
    if any(x < 1 for x in a):
        raise ValueError("every attachment multiplicity must be >= 1")
    if any(x > k for x in a):
        raise ValueError(f"attachment multiplicity exceeds k={k}")
    if sum(a) < (r - 2) * k:
        raise ValueError(f"attachment total {sum(a)} below (r-2)k = {(r - 2) * k}")
    if F.max_multiplicity() > k:
        raise ValueError(f"F has multiplicity above k={k}")
    K = PartiteHost(tuple((v,) for v in range(F.n)), F.with_cap(k), k)
    return augment(K, a)


def default_surrogate_t(H: PatternMultigraph) -> int:
    """Smallest achievable largest-class size over the critical colorings of H."""
    cols = critical_colorings(H)
    return min(max(len(c) for c in col.classes) for col in cols)


def kplus_friendly_probe(H: PatternMultigraph, k: int, t: int | None = None) -> dict:
    """Friendliness of a small complete multipartite host with multiplicities min(h, k).

    The asymptotic argument uses parts of size 2h; a pass here at a smaller t
    is supporting evidence only and a failure is inconclusive.
    """
    r, h = H.chi, H.h
    if r < 3 or not H.critical_edges:
        raise ValueError("pattern must be color-critical with chromatic number >= 3")
    if not in_friendly_range(k, r, h):
        raise ValueError(f"k={k} below (r-1)/(r-2)(h-1) = {Fraction(r - 1, r - 2) * (h - 1)}")
    t = default_surrogate_t(H) if t is None else t
    K = PartiteHost.complete(r - 1, t, min(h, k), k)
    rep = is_h_friendly(K, H)
    return {
        "r": r, "h": h, "k": k, "t": t, "t_reference": 2 * h, "multiplicity": min(h, k),
        "friendly": rep.friendly, "evidence": "supporting" if rep.friendly else "inconclusive",
        "report": rep.to_dict(),
    }
