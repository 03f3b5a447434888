"""Exact-rational audits of the closed-form inequalities behind the r >= 5 argument.

Everything here is affine in h, so "for all h >= C(r,2)" is settled by two
checks: the h-coefficient is non-negative and the value at h = C(r,2) is
non-negative.  No floats anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .graphs import MultiGraph, PatternMultigraph

F = Fraction


def ceil_half(r: int) -> int:
    return (r + 1) // 2


def slack(r: int, h) -> Fraction:
    """h - r(r-2)/4 + 1, the quantity every bound in this module scales with."""
    return F(h) - F(r * (r - 2), 4) + 1


@dataclass(frozen=True)
class ParamTuple:
    r: int
    ell: int
    i: int | None = None

    @property
    def s(self) -> int:
        return ceil_half(self.r)

    @property
    def case(self) -> str | None:
        """Which range of the first inequality this tuple lies in, if any."""
        r, s, ell, i = self.r, self.s, self.ell, self.i
        if i is None:
            return None
        if 2 <= ell <= s - 2 and r - s + 1 <= i <= r - 1:
            return "i"
        if ell == s - 1 and r - s + 2 <= i <= r - 1:
            return "ii"
        return None


@dataclass(frozen=True)
class AffineCheck:
    slope: Fraction
    at_boundary: Fraction

    @property
    def ok(self) -> bool:
        return self.slope >= 0 and self.at_boundary >= 0


def affine_nonnegative(f: Callable[[Fraction], Fraction], h0) -> AffineCheck:
    """Slope and boundary value of an affine f on [h0, inf).

    Raises if f is visibly not affine (second difference nonzero), since the
    two-point reduction would then be unsound.
    """
    h0 = F(h0)
    a, b, c = f(h0), f(h0 + 1), f(h0 + 2)
    if c - 2 * b + a != 0:
        raise ValueError("function is not affine in h")
    return AffineCheck(b - a, a)


@dataclass
class AuditReport:
    name: str
    r_max: int | None = None
    checked: int = 0
    violations: list = field(default_factory=list)
    min_margin: Fraction | None = None
    min_slope: Fraction | None = None
    worst: dict | None = None
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def note(self, chk: AffineCheck, where: dict):
        self.checked += 1
        if self.min_slope is None or chk.slope < self.min_slope:
            self.min_slope = chk.slope
        if self.min_margin is None or chk.at_boundary < self.min_margin:
            self.min_margin = chk.at_boundary
            self.worst = dict(where, margin=str(chk.at_boundary), slope=str(chk.slope))
        if not chk.ok:
            self.violations.append(dict(where, margin=str(chk.at_boundary), slope=str(chk.slope)))

    def to_dict(self) -> dict:
        def s(x):
            return None if x is None else str(x)
        return {
            "name": self.name, "r_max": self.r_max, "checked": self.checked, "ok": self.ok,
            "violations": self.violations, "min_margin": s(self.min_margin),
            "min_slope": s(self.min_slope), "worst": self.worst, "rows": self.rows,
        }


# ------------------------------------------------- first inequality

def _first_coeff(r: int, ell: int, i: int) -> Fraction:
    return F(2, r) * (r - 2 - F(ell - 1, i - ell))


def first_gap(r: int, ell: int, i: int, h) -> Fraction:
    s = ceil_half(r)
    return _first_coeff(r, ell, i) * slack(r, h) - F(h) + (ell - 1) * s + r - i


def first_gap_check(r: int, ell: int, i: int) -> AffineCheck:
    # the h-coefficient is read off directly; affine_nonnegative is the generic route
    return AffineCheck(_first_coeff(r, ell, i) - 1, first_gap(r, ell, i, comb(r, 2)))


def first_gap_ranges(r: int) -> list[tuple[int, int, str]]:
    s = ceil_half(r)
    out = [(ell, i, "i") for ell in range(2, s - 1) for i in range(r - s + 1, r)]
    out += [(s - 1, i, "ii") for i in range(r - s + 2, r)]
    return out


def check_lemma_A1(r_max: int = 100) -> AuditReport:
    if r_max < 5:
        raise ValueError("r_max must be >= 5")
    rep = AuditReport("lemmaA1", r_max)
    for r in range(5, r_max + 1):
        for ell, i, case in first_gap_ranges(r):
            rep.note(first_gap_check(r, ell, i), {"r": r, "ell": ell, "i": i, "case": case})
    return rep


# ------------------------------------------------ second inequality

def second_lhs(r: int, ell: int, h) -> Fraction:
    return 2 * F(r - ell - 1, r - ell) * F(r - 1, r) * slack(r, h)


def second_rhs(r: int, ell: int, h) -> Fraction:
    return F(h) - (ell - 1) * ceil_half(r)


def second_gap_check(r: int, ell: int) -> AffineCheck:
    h0 = comb(r, 2)
    slope = 2 * F(r - ell - 1, r - ell) * F(r - 1, r) - 1
    return AffineCheck(slope, second_lhs(r, ell, h0) - second_rhs(r, ell, h0))


def check_lemma_A2(r_max: int = 100) -> AuditReport:
    if r_max < 5:
        raise ValueError("r_max must be >= 5")
    rep = AuditReport("lemmaA2", r_max)
    for r in range(5, r_max + 1):
        for ell in range(2, ceil_half(r)):
            rep.note(second_gap_check(r, ell), {"r": r, "ell": ell})
    return rep


# ----------------------------------------------- sorted-sum bound

def hj_bound(r: int, h, j: int) -> Fraction:
    s = ceil_half(r)
    return F(j, s + j - 1) * slack(r, h)


def check_claim_hj(H: MultiGraph) -> AuditReport:
    """h_j <= j/(s+j-1)·(h - r(r-2)/4 + 1) for j = 1..s+1.

    h_j sums the multiplicities ranked s..s+j-1 in descending order.
    """
    r = H.n
    if r < 5:
        raise ValueError(f"pattern needs r >= 5 vertices, got {r}")
    if any(x < 1 for x in H.mult):
        raise ValueError("every pair of the pattern must have multiplicity >= 1")
    s = ceil_half(r)
    h = H.total
    desc = sorted(H.mult, reverse=True)
    rep = AuditReport("hj")
    for j in range(1, s + 2):
        hj = sum(desc[s - 1:s + j - 1])
        bound = hj_bound(r, h, j)
        margin = bound - hj
        rep.checked += 1
        rep.rows.append({"j": j, "h_j": hj, "bound": str(bound), "margin": str(margin)})
        if rep.min_margin is None or margin < rep.min_margin:
            rep.min_margin = margin
            rep.worst = {"j": j, "h_j": hj, "bound": str(bound)}
        if margin < 0:
            rep.violations.append({"j": j, "h_j": hj, "bound": str(bound), "mult": list(H.mult)})
    return rep


def random_complete_pattern(r: int, rng: random.Random, hi: int = 3) -> PatternMultigraph:
    mult = tuple(rng.randint(1, hi) for _ in range(comb(r, 2)))
    return PatternMultigraph(r, max(mult), mult)


def sweep_hj(count: int, rs: Sequence[int] = (5, 6, 7), hi: int = 3, seed: int = 0) -> AuditReport:
    rng = random.Random(seed)
    rep = AuditReport("hj_random")
    for _ in range(count):
        H = random_complete_pattern(rng.choice(list(rs)), rng, hi)
        sub = check_claim_hj(H)
        rep.checked += 1
        if rep.min_margin is None or sub.min_margin < rep.min_margin:
            rep.min_margin = sub.min_margin
            rep.worst = dict(sub.worst, mult=list(H.mult))
        rep.violations.extend(sub.violations)
    return rep


# ---------------------------------------------------------- order statistics

def order_statistics(values: Sequence, ell: int, mode: str = "min"):
    """The ell-th smallest (mode="min") or largest (mode="max") element."""
    if not 1 <= ell <= len(values):
        raise ValueError(f"ell={ell} out of range for {len(values)} values")
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    ordered = sorted(values, reverse=(mode == "max"))
    return ordered[ell - 1]


def k_thresholds(r: int, h) -> tuple[Fraction, Fraction]:
    return F(r - 1, r - 2) * (F(h) - 1), 2 * F(r - 1, r) * slack(r, h)


@dataclass
class BoundStep:
    name: str
    actual: object
    chain: list  # successive lower bounds, each expected <= the previous one
    strict: Fraction | None = None  # bound that 'actual' must strictly exceed
    ok: bool = True

    def to_dict(self) -> dict:
        return {"name": self.name, "actual": str(self.actual), "chain": [str(c) for c in self.chain],
                "strict": None if self.strict is None else str(self.strict), "ok": self.ok}


def _step(name, actual, chain, strict=None) -> BoundStep:
    ok = all(a >= b for a, b in zip([actual] + chain, chain))
    if strict is not None:
        ok = ok and chain[-1] > strict
    return BoundStep(name, actual, chain, strict, ok)


def check_degree_sum_bounds(r: int, k: int, h: int, row: Sequence[int], role: str = "interior") -> dict:
    """Recompute the order-statistic lower bounds for one vertex's row of multiplicities.

    ``role="interior"``: ``row`` lists w(v_i v_j) for j < i, so i = len(row)+1,
    with the hypothesis sum >= k(r-2)/(r-1)·(i-1).
    ``role="apex"``: ``row`` lists the r-1 multiplicities of the added vertex,
    each >= 1, with sum >= (r-2)k.
    Every chain is checked numerically; the strict steps need k above both
    thresholds and are skipped (reported) otherwise.
    """
    if role not in ("interior", "apex"):
        raise ValueError(f"role must be 'interior' or 'apex', got {role!r}")
    s = ceil_half(r)
    X = slack(r, h)
    t1, t2 = k_thresholds(r, h)
    k_ok = k > t1 and k > t2
    total = sum(row)
    steps: list[BoundStep] = []
    hyp = all(0 <= x <= k for x in row)

    def strict(v):
        return v if k_ok else None

    if role == "interior":
        i = len(row) + 1
        need = F(k * (r - 2), r - 1) * (i - 1)
        hyp = hyp and total >= need and i >= 3
        if i >= 3:
            steps.append(_step("min", min(row), [F(total - (i - 2) * k), F(k * (r - i), r - 1)],
                               strict((r - i) * F(2, r) * X)))
            st = _step("min2", order_statistics(row, 2, "min"),
                       [F(total - (i - 3) * k, 2), F(k * (2 * r - i - 1), 2 * (r - 1))],
                       strict(F(2 * r - i - 1, r) * X))
            if k_ok:
                st.ok = st.ok and F(2 * r - i - 1, r) * X >= X
            steps.append(st)
            steps.append(_step("max", max(row), [F(total, i - 1), F(k * (r - 2), r - 1)],
                               strict(F(h - 1))))
            for ell in range(2, i - 1):
                coeff = F(r - 2, r - 1) - F(ell - 1, (r - 1) * (i - ell))
                st = _step(f"max_{ell}", order_statistics(row, ell, "max"),
                           [F(total - (ell - 1) * k, i - ell), k * coeff],
                           strict(F(2, r) * (r - 2 - F(ell - 1, i - ell)) * X))
                if ParamTuple(r, ell, i).case and k_ok and hyp:
                    st.ok = st.ok and order_statistics(row, ell, "max") >= h - ((ell - 1) * s + r - i)
                steps.append(st)
    else:
        if len(row) != r - 1:
            raise ValueError(f"apex row needs {r - 1} entries, got {len(row)}")
        hyp = hyp and min(row) >= 1 and total >= (r - 2) * k
        steps.append(_step("min2", order_statistics(row, 2, "min"),
                           [F(total - (r - 3) * k, 2), F(k, 2)], strict(F(r - 1, r) * X)))
        st = _step("min3", order_statistics(row, 3, "min"),
                   [F(total - (r - 4) * k, 3), F(2 * k, 3)], strict(F(4, 3) * F(r - 1, r) * X))
        if k_ok:
            st.ok = st.ok and F(4, 3) * F(r - 1, r) * X > X
        steps.append(st)
        st = _step("max", max(row), [F(total, r - 1), F(k * (r - 2), r - 1)], strict(F(h - 1)))
        if k_ok and hyp:
            st.ok = st.ok and max(row) >= h
        steps.append(st)
        for ell in range(2, s):
            st = _step(f"max_{ell}", order_statistics(row, ell, "max"),
                       [F(total - (ell - 1) * k, r - ell), F((r - ell - 1) * k, r - ell)],
                       strict(2 * F(r - ell - 1, r - ell) * F(r - 1, r) * X))
            if k_ok and hyp:
                st.ok = st.ok and order_statistics(row, ell, "max") >= h - (ell - 1) * s
            steps.append(st)
    # the chain only follows from the hypotheses; without them it is informational
    ok = all(st.ok for st in steps) if hyp else True
    return {"r": r, "k": k, "h": h, "role": role, "row": list(row), "hypothesis": hyp,
            "k_above_thresholds": k_ok, "ok": ok, "steps": [st.to_dict() for st in steps]}
