"""Exact ex_k(n, H) at desk scale.

A simply k-colored multigraph can be replaced by its nested coloring without
changing the edge multiset and without creating a multicolored H, and every
nested coloring is a coloring.  So ex_k(n, H) is the maximum of sum(w) over
multiplicity maps w: pairs -> [0, k] whose nested coloring is H-free, and both
searches below work on those maps only.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations
from math import comb

import numpy as np

from .colorings import construct_candidate_i, construct_candidate_ii, from_multiplicity
from .graphs import (MultiGraph, PatternMultigraph, SimpleGraph, SizeLimitError, all_pairs,
                     pair_index, turan_count, turan_part_sizes)
from .rainbow import has_rainbow_general, has_rainbow_nested, rainbow_capacity_lists

DEFAULT_BUDGET = 10**8
OPTIMA_LIMIT = 100_000


@dataclass(frozen=True)
class ExkInstance:
    n: int
    k: int
    H: PatternMultigraph

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.n < self.H.n:
            raise ValueError(f"n={self.n} is smaller than |V(H)|={self.H.n}")


@dataclass
class ExkResult:
    n: int
    k: int
    h: int
    r: int
    value: int | None
    optima: list = field(default_factory=list)
    candidate_i: int | None = None
    candidate_ii: int | None = None
    classification: str = ""
    status: str = "exact"
    lower: int | None = None
    upper: int | None = None
    nodes: int = 0
    elapsed: float = 0.0
    method: str = ""
    optima_truncated: bool = False

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    @property
    def identical_colors(self) -> bool:
        """Every optimum uses only multiplicities 0 and k, i.e. all k colors coincide."""
        return bool(self.optima) and all(set(w) <= {0, self.k} for w in self.optima)

    def optimum_maps(self) -> list[MultiGraph]:
        return [MultiGraph(self.n, self.k, w) for w in self.optima]

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "h": self.h, "r": self.r, "value": self.value,
            "status": self.status, "lower": self.lower, "upper": self.upper,
            "candidate_i": self.candidate_i, "candidate_ii": self.candidate_ii,
            "classification": self.classification, "identical_colors": self.identical_colors,
            "optima": [list(w) for w in self.optima], "optima_truncated": self.optima_truncated,
            "nodes": self.nodes, "elapsed": round(self.elapsed, 6), "method": self.method,
        }


# ------------------------------------------------------------ candidates

def candidate_values(n: int, k: int, H: PatternMultigraph) -> tuple[int | None, int]:
    """((h-1)·C(n,2) if k >= h-1 else None, k·t_{r-1}(n))."""
    h, r = H.h, H.chi
    cand_i = (h - 1) * comb(n, 2) if h >= 1 and k >= h - 1 else None
    cand_ii = k * turan_count(n, r - 1) if 1 <= r - 1 <= n else 0
    return cand_i, cand_ii


def _is_turan_support(n: int, mult, parts: int) -> bool:
    """Is {pairs with mult > 0} isomorphic to T_parts(n)?  Non-edges must form
    disjoint cliques whose sizes are the balanced part sizes."""
    if parts < 1 or parts > n:
        return False
    pairs = all_pairs(n)
    non_adj = [set() for _ in range(n)]
    for (u, v), x in zip(pairs, mult):
        if x == 0:
            non_adj[u].add(v)
            non_adj[v].add(u)
    seen, sizes = set(), []
    for v in range(n):
        if v in seen:
            continue
        block = non_adj[v] | {v}
        for u in block:
            if non_adj[u] | {u} != block:
                return False
        seen |= block
        sizes.append(len(block))
    return sorted(sizes) == sorted(turan_part_sizes(n, parts))


def classify_optimum(n: int, k: int, H: PatternMultigraph, mult) -> set[str]:
    h, r = H.h, H.chi
    labels = set()
    if h >= 1 and k >= h - 1 and all(x == h - 1 for x in mult):
        labels.add("candidate_i")
    if k > 0 and set(mult) <= {0, k} and _is_turan_support(n, mult, r - 1):
        labels.add("candidate_ii")
    elif k == 0 and not any(mult):
        labels.add("candidate_ii")
    return labels or {"other"}


def classify(n: int, k: int, H: PatternMultigraph, optima) -> str:
    labels = set()
    for w in optima:
        labels |= classify_optimum(n, k, H, w)
    return "+".join(sorted(labels))


# ------------------------------------------------------ canonical optima

class _OrbitSet:
    """Collects canonical forms of maps, expanding each new orbit once."""

    def __init__(self, n: int):
        self.n = n
        pairs = all_pairs(n)
        self.maps = [[pair_index(p[u], p[v], n) for u, v in pairs] for p in permutations(range(n))]
        self.members: set = set()
        self.canon: list = []

    def add(self, mult) -> None:
        mult = tuple(int(x) for x in mult)
        if mult in self.members:
            return
        orbit = set()
        for mp in self.maps:
            relabeled = [0] * len(mult)
            for i, j in enumerate(mp):
                relabeled[j] = mult[i]
            orbit.add(tuple(relabeled))
        self.members |= orbit
        self.canon.append(min(orbit))

    def result(self) -> list:
        return sorted(self.canon)


def canonical_optima(n: int, optima) -> list:
    orbits = _OrbitSet(n)
    for w in optima:
        orbits.add(w)
    return orbits.result()


# ------------------------------------------------------- brute force

def _digits(idx: np.ndarray, base: int, m: int) -> np.ndarray:
    out = np.empty((idx.size, m), dtype=np.int16)
    rest = idx.copy()
    for j in range(m - 1, -1, -1):
        out[:, j] = rest % base
        rest //= base
    return out


def _rainbow_mask(W: np.ndarray, images) -> np.ndarray:
    """Rows of W (multiplicity maps) whose nested coloring contains some image rainbow."""
    hit = np.zeros(W.shape[0], dtype=bool)
    for pairs, dem in images:
        caps = W[:, list(pairs)].astype(np.int32)
        dem = np.asarray(dem, dtype=np.int32)
        top = int(dem.max())
        key = caps * (top + 1) + (top - dem)
        order = np.argsort(key, axis=1, kind="stable")
        cs = np.take_along_axis(caps, order, axis=1)
        ds = np.take_along_axis(np.broadcast_to(dem, caps.shape), order, axis=1)
        hit |= (np.cumsum(ds, axis=1) <= cs).all(axis=1)
    return hit


def exk_bruteforce(inst: ExkInstance, budget: int = DEFAULT_BUDGET,
                   chunk: int = 1 << 18) -> ExkResult:
    """Exhaustive maximum over all (k+1)^C(n,2) multiplicity maps."""
    n, k, H = inst.n, inst.k, inst.H
    m = comb(n, 2)
    total = (k + 1) ** m
    cand_i, cand_ii = candidate_values(n, k, H)
    if total > budget:
        lower = max(x for x in (cand_i, cand_ii) if x is not None)
        raise SizeLimitError(f"exk_bruteforce: {total} maps exceed budget {budget}", best=lower)
    t0 = time.perf_counter()
    images = rainbow_capacity_lists(H, n)
    best, raw, truncated = -1, [], False
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        W = _digits(idx, k + 1, m)
        tot = W.sum(axis=1, dtype=np.int64)
        if images:
            tot[_rainbow_mask(W, images)] = -1
        mx = int(tot.max())
        if mx < best or mx < 0:
            continue
        rows = W[tot == mx]
        if mx > best:
            best, raw = mx, []
        if len(raw) + len(rows) > OPTIMA_LIMIT:
            rows = rows[: max(0, OPTIMA_LIMIT - len(raw))]
            truncated = True
        raw.extend(tuple(int(x) for x in r) for r in rows)
    optima = canonical_optima(n, raw)
    return ExkResult(
        n=n, k=k, h=H.h, r=H.chi, value=best, optima=optima, candidate_i=cand_i,
        candidate_ii=cand_ii, classification=classify(n, k, H, optima), status="exact",
        lower=best, upper=best, nodes=total, elapsed=time.perf_counter() - t0,
        method="bruteforce", optima_truncated=truncated,
    )


# ---------------------------------------------------- branch and bound

class _Budget(Exception):
    def __init__(self, upper: int):
        self.upper = upper


def _images_by_last(images, m: int):
    by_last = [[] for _ in range(m)]
    for pairs, dem in images:
        if pairs:
            by_last[max(pairs)].append((pairs, tuple(-d for d in dem)))
    return by_last


def _rainbow_image(w, pairs, negdem) -> bool:
    caps = [w[p] for p in pairs]
    running = 0
    for c, nd in sorted(zip(caps, negdem)):
        running -= nd
        if running > c:
            return False
    return True


def _contains_image(w, pairs, negdem) -> bool:
    return all(w[p] for p in pairs)


def _transposition_maps(n: int) -> list[list[int]]:
    pairs = all_pairs(n)
    out = []
    for i in range(n - 1):
        sw = list(range(n))
        sw[i], sw[i + 1] = i + 1, i
        out.append([pair_index(sw[u], sw[v], n) for u, v in pairs])
    return out


class _Search:
    def __init__(self, n, k, images, hit, budget, collect, symmetry, best):
        self.n, self.k = n, k
        self.m = comb(n, 2)
        self.by_last = _images_by_last(images, self.m)
        self.hit = hit
        self.budget = budget
        self.collect = collect
        self.sym = _transposition_maps(n) if symmetry else []
        self.best = best
        self.optima: list = []
        self.truncated = False
        self.nodes = 0
        self.w = [0] * self.m

    def _lex_ok(self, p: int) -> bool:
        # w must stay >=lex its image under every adjacent transposition
        w = self.w
        for mp in self.sym:
            for q in range(p + 1):
                s = mp[q]
                if s > p:
                    break
                if w[q] != w[s]:
                    if w[q] < w[s]:
                        return False
                    break
        return True

    def _prune(self, bound: int) -> bool:
        return bound < self.best if self.collect else bound <= self.best

    def go(self, p: int, cur: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget(cur + self.k * (self.m - p))
        if p == self.m:
            if cur > self.best:
                self.best = cur
                self.optima = [tuple(self.w)]
            elif cur == self.best and self.collect:
                if len(self.optima) < OPTIMA_LIMIT:
                    self.optima.append(tuple(self.w))
                else:
                    self.truncated = True
            return
        rest = self.k * (self.m - p - 1)
        checks = self.by_last[p]
        w = self.w
        safe = False
        for c in range(self.k, -1, -1):
            if self._prune(cur + c + rest):
                break
            w[p] = c
            if not safe:
                # rainbow-ness is monotone in c, so once c is free all smaller c are
                if any(self.hit(w, pairs, nd) for pairs, nd in checks):
                    continue
                safe = True
            if self.sym and not self._lex_ok(p):
                continue
            try:
                self.go(p + 1, cur + c)
            except _Budget as b:
                if c > 0:
                    b.upper = max(b.upper, cur + c - 1 + rest)
                raise
        w[p] = 0


def exk_branch_and_bound(inst: ExkInstance, budget: int = DEFAULT_BUDGET, symmetry: bool = False,
                         collect_optima: bool = True, seed_incumbent: bool = True) -> ExkResult:
    """Depth-first search over pair multiplicities in lexicographic pair order.

    Values are tried from k down to 0.  A branch is cut when the current total
    plus k per undecided pair cannot reach the incumbent, or when some image
    of H whose pairs are all decided is already multicolored.  ``budget``
    counts search nodes; on exhaustion the result is marked ``bounded`` with
    valid lower/upper bounds.
    """
    n, k, H = inst.n, inst.k, inst.H
    t0 = time.perf_counter()
    cand_i, cand_ii = candidate_values(n, k, H)
    start = -1
    if seed_incumbent:
        start = max(x for x in (cand_i, cand_ii) if x is not None)
    images = rainbow_capacity_lists(H, n)
    s = _Search(n, k, images, _rainbow_image, budget, collect_optima, symmetry, start)
    status, upper = "exact", None
    try:
        s.go(0, 0)
    except _Budget as b:
        status, upper = "bounded", max(b.upper, s.best)
    found = s.best if s.optima else None
    optima = canonical_optima(n, s.optima)
    if status == "exact":
        # a seeded incumbent is a construction known to be free, so it is attained
        # even when the search (not collecting ties) never revisits it
        value = s.best if (s.optima or seed_incumbent) else None
        lower = upper = value
    else:
        value = None
        lower = s.best if (s.optima or seed_incumbent) else None
    return ExkResult(
        n=n, k=k, h=H.h, r=H.chi, value=value, optima=optima if status == "exact" else [],
        candidate_i=cand_i, candidate_ii=cand_ii,
        classification=(("unclassified" if not optima else classify(n, k, H, optima))
                        if status == "exact" else "bounded"),
        status=status, lower=lower if lower is not None else found, upper=upper,
        nodes=s.nodes, elapsed=time.perf_counter() - t0, method="branch_and_bound",
        optima_truncated=s.truncated,
    )


def exk(inst: ExkInstance, budget: int = DEFAULT_BUDGET, symmetry: bool = False,
        method: str = "bnb") -> ExkResult:
    if method == "brute":
        return exk_bruteforce(inst, budget)
    return exk_branch_and_bound(inst, budget, symmetry)


# ---------------------------------------------------- simple Turán number

def turan_number(n: int, H: MultiGraph, budget: int = DEFAULT_BUDGET) -> int:
    """ex(n, H): most edges in an n-vertex simple graph without a copy of H's underlying graph."""
    if H.n > n:
        return comb(n, 2)
    und = MultiGraph.from_simple(H.underlying())
    images = rainbow_capacity_lists(und, n)
    chi = PatternMultigraph.from_multigraph(und).chi
    start = turan_count(n, chi - 1) if chi >= 2 else 0
    # T_{chi-1}(n) has no copy of H, so it seeds the incumbent; search for better
    s = _Search(n, 1, images, _contains_image, budget, False, False, start)
    try:
        s.go(0, 0)
    except _Budget as b:
        raise SizeLimitError(f"turan_number: budget {budget} exhausted", best=s.best) from None
    return s.best


def large_k_threshold(n: int, H: MultiGraph, budget: int = DEFAULT_BUDGET) -> int:
    """C(n,2) - ex(n,H) + e(H): from this k on, k identical extremal H-free colors are optimal."""
    return comb(n, 2) - turan_number(n, H, budget) + H.total


# name kept for the public API
theorem_15_threshold = large_k_threshold


# --------------------------------------------------------------- reports

def verify_constructions_free(n: int, k: int, H: PatternMultigraph) -> dict:
    """Check both candidate constructions with both rainbow oracles."""
    h, r = H.h, H.chi
    out = {"n": n, "k": k, "h": h, "r": r}
    bounds = []
    if h >= 1 and k >= h - 1:
        G = construct_candidate_i(n, h, k)
        w = MultiGraph.uniform(n, h - 1, k)
        nested_free = has_rainbow_nested(H, w) is None
        general_free = has_rainbow_general(H, G) is None
        out["candidate_i"] = {"applicable": True, "edges": G.total,
                              "free_nested": nested_free, "free_general": general_free}
        if nested_free and general_free:
            bounds.append(G.total)
    else:
        out["candidate_i"] = {"applicable": False, "reason": f"k={k} < h-1={h - 1}"}
    if 2 <= r - 1 <= n:
        G = construct_candidate_ii(n, r, k)
        T = G.colors[0] if k else SimpleGraph.empty(n)
        w = MultiGraph.from_simple(T, k, k) if k else MultiGraph.uniform(n, 0, 0)
        nested_free = has_rainbow_nested(H, w) is None
        general_free = has_rainbow_general(H, G) is None
        out["candidate_ii"] = {"applicable": True, "edges": G.total,
                               "free_nested": nested_free, "free_general": general_free}
        if nested_free and general_free:
            bounds.append(G.total)
    else:
        out["candidate_ii"] = {"applicable": False, "reason": f"r-1={r - 1} outside [2, n]"}
    out["lower_bound"] = max(bounds) if bounds else 0
    out["ok"] = all(v.get("free_nested", True) and v.get("free_general", True)
                    for key, v in out.items() if key.startswith("candidate"))
    return out


def multiplicity_cap_check(n: int, k: int, H: PatternMultigraph,
                           result: ExkResult | None = None,
                           budget: int = DEFAULT_BUDGET) -> dict:
    """Do all optimal maps keep every pair multiplicity <= h-1?

    Only meaningful for an r-vertex H with every pair present and
    h <= k <= h + floor(r/2) - 1.  At small n this is a probe, so deviations
    are reported rather than raised.
    """
    h, r = H.h, H.n
    lo, hi = h, h + r // 2 - 1
    rep = {"n": n, "k": k, "h": h, "r": r, "range": [lo, hi], "cap": h - 1}
    if any(x < 1 for x in H.mult):
        return {**rep, "applicable": False, "reason": "pattern has a pair of multiplicity 0"}
    if not lo <= k <= hi:
        return {**rep, "applicable": False, "reason": f"k={k} outside [{lo}, {hi}]"}
    if result is None:
        result = exk_branch_and_bound(ExkInstance(n, k, H), budget)
    if not result.exact:
        return {**rep, "applicable": True, "holds": None, "reason": "solver budget exhausted"}
    deviations = [list(w) for w in result.optima if max(w, default=0) > h - 1]
    return {**rep, "applicable": True, "value": result.value,
            "optima": len(result.optima), "deviations": deviations, "holds": not deviations,
            "some_optimum_within_cap": len(deviations) < len(result.optima)}


def revalidate_optima(H: PatternMultigraph, result: ExkResult) -> bool:
    """Every optimum is free under the matching oracle and sums to the value."""
    for w in result.optimum_maps():
        if w.total != result.value:
            return False
        if has_rainbow_general(H, from_multiplicity(w, result.k)) is not None:
            return False
    return True
