"""Command-line front end: ``mcturan <command> ...`` or ``python -m mcturan``.

Exit codes: 0 ok, 2 usage / invalid input, 3 budget exhausted (partial result).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import platform
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .audit import (check_claim_hj, check_degree_sum_bounds, check_lemma_A1, check_lemma_A2,
                    sweep_hj)
from .cache import ResultCache, default_cache_dir, result_from_record
from .colorings import construct_candidate_i, construct_candidate_ii, nest
from .formats import (FormatError, format_colored, load_colored, load_multigraph, load_pattern,
                      load_simple)
from .friendliness import PartiteHost, default_surrogate_t, is_h_friendly
from .graphs import PatternMultigraph, SizeLimitError
from .packing import find_packing, verify_packing_theorems
from .rainbow import has_rainbow_general, has_rainbow_nested
from .solver import DEFAULT_BUDGET, ExkInstance, ExkResult, exk

EXIT_OK, EXIT_USAGE, EXIT_PARTIAL = 0, 2, 3


class UsageError(Exception):
    pass


@dataclass
class ExperimentSpec:
    command: str
    params: dict = field(default_factory=dict)
    emit: str = "json"
    budget: int = DEFAULT_BUDGET
    seed: int = 0

    def meta(self) -> dict:
        return {
            "command": self.command, "params": self.params, "emit": self.emit,
            "budget": self.budget, "seed": self.seed,
            "versions": {"mcturan": __version__, "python": platform.python_version(),
                         "numpy": np.__version__},
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, default=_jsonable)


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    cols = list(rows[0])
    w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({c: (json.dumps(row[c], default=_jsonable) if isinstance(row.get(c), (list, dict))
                        else row.get(c)) for c in cols})
    return buf.getvalue()


def _pattern(spec: str) -> PatternMultigraph:
    try:
        return load_pattern(spec)
    except FileNotFoundError as exc:
        raise UsageError(f"pattern {spec!r}: not an alias and no such file") from exc


def _int_range(text: str) -> list[int]:
    """'3-5' -> [3,4,5]; '2,4' -> [2,4]; '' -> []."""
    out: list[int] = []
    for part in filter(None, text.split(",")):
        if "-" in part:
            a, b = part.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


# ------------------------------------------------------------------ exk

def solve_cached(n: int, k: int, H: PatternMultigraph, budget: int, symmetry: bool, method: str,
                 cache: ResultCache | None) -> tuple[ExkResult, bool]:
    if cache is not None:
        rec = cache.lookup(n, k, H)
        if rec is not None and rec["status"] == "exact":
            return result_from_record(rec), True
    try:
        res = exk(ExkInstance(n, k, H), budget, symmetry, method)
    except SizeLimitError as exc:
        from .solver import candidate_values
        ci, cii = candidate_values(n, k, H)
        res = ExkResult(n=n, k=k, h=H.h, r=H.chi, value=None, candidate_i=ci, candidate_ii=cii,
                        classification="bounded", status="bounded", lower=exc.best,
                        method="bruteforce")
    if cache is not None:
        cache.put(H, res, __version__)
    return res, False


def _open_cache(args) -> ResultCache | None:
    if getattr(args, "no_cache", False):
        return None
    d = default_cache_dir()
    return ResultCache(d) if d else None


def cmd_exk(args, spec: ExperimentSpec):
    H = _pattern(args.pattern)
    res, hit = solve_cached(args.n, args.k, H, args.budget, args.symmetry == "on", args.method,
                            _open_cache(args))
    body = res.to_dict()
    body["pattern"] = H.name or args.pattern
    body["from_cache"] = hit
    return body, (EXIT_OK if res.exact else EXIT_PARTIAL)


# ----------------------------------------------------------- free / nest

def _load_host(path: str):
    text = Path(path).read_text()
    if text.lstrip().startswith("colored"):
        return load_colored(path)
    g, _ = load_multigraph(path)
    return g


def cmd_free(args, spec):
    H = _pattern(args.pattern)
    G = _load_host(args.host)
    from .colorings import ColoredMultigraph, from_multiplicity
    if args.oracle == "nested":
        if isinstance(G, ColoredMultigraph):
            raise UsageError("nested oracle needs a multiplicity map or a nested coloring")
        wit = has_rainbow_nested(H, G)
    elif args.oracle == "general":
        Gc = G if isinstance(G, ColoredMultigraph) else from_multiplicity(G, G.k_cap)
        wit = has_rainbow_general(H, Gc)
    else:
        from .rainbow import has_rainbow
        wit = has_rainbow(H, G)
    return {"free": wit is None, "witness": wit.to_json() if wit else None}, EXIT_OK


def cmd_nest(args, spec):
    G = load_colored(args.host)
    N = nest(G)
    text = format_colored(N)
    if args.out:
        Path(args.out).write_text(text)
    return {"n": N.n, "k": N.k, "edges": N.total, "nested": text}, EXIT_OK


# ---------------------------------------------------------------- pack

def cmd_pack(args, spec):
    if args.verify:
        rep = verify_packing_theorems(args.nmax, args.exhaustive_max, args.samples, spec.seed)
        return rep.to_dict(), EXIT_OK
    if not (args.g and args.h):
        raise UsageError("pack needs --g and --h, or --verify")
    G, H = load_simple(args.g), load_simple(args.h)
    sigma = find_packing(G, H)
    return {"packs": sigma is not None, "sigma": list(sigma.sigma) if sigma else None}, EXIT_OK


# ------------------------------------------------------------ friendly

def cmd_friendly(args, spec):
    H = _pattern(args.pattern)
    parts = args.parts if args.parts is not None else H.chi - 1
    if args.host:
        w, _ = load_multigraph(args.host)
        K = PartiteHost.from_multigraph(w, parts, args.k)
        t = K.t
    else:
        t = args.t if args.t is not None else default_surrogate_t(H)
        value = args.w if args.w is not None else min(H.h, args.k)
        K = PartiteHost.complete(parts, t, value, args.k)
    rep = is_h_friendly(K, H)
    return {"parts": parts, "t": t, "k": args.k, **rep.to_dict()}, EXIT_OK


# --------------------------------------------------------------- audit

def cmd_audit(args, spec):
    if args.which == "lemmaA1":
        rep = check_lemma_A1(args.rmax).to_dict()
    elif args.which == "lemmaA2":
        rep = check_lemma_A2(args.rmax).to_dict()
    elif args.which == "hj":
        if args.pattern:
            rep = check_claim_hj(_pattern(args.pattern)).to_dict()
        elif args.random:
            rep = sweep_hj(args.random, seed=spec.seed).to_dict()
        else:
            raise UsageError("audit hj needs --pattern or --random")
    else:
        rep = check_degree_sum_bounds(args.r, args.k, args.h, _int_range(args.row), args.role)
    return rep, EXIT_OK


# ----------------------------------------------------------- construct

def cmd_construct(args, spec):
    if args.type == "turan":
        if args.r is None:
            raise UsageError("construct --type turan needs --r")
        G = construct_candidate_ii(args.n, args.r, args.k)
    else:
        if args.h is None:
            raise UsageError("construct --type clique needs --h")
        G = construct_candidate_i(args.n, args.h, args.k)
    text = format_colored(G)
    if args.out:
        Path(args.out).write_text(text)
    return {"type": args.type, "n": G.n, "k": G.k, "edges": G.total,
            "out": args.out, "colored": None if args.out else text}, EXIT_OK


# --------------------------------------------------------------- sweep

def regime(k: int, r: int, h: int) -> str:
    """Which side of the (r-1)/(r-2)(h-1) boundary k lies on."""
    if r < 3:
        return "n/a"
    if Fraction(k) >= Fraction(r - 1, r - 2) * (h - 1):
        return "upper"
    return "lower" if k >= h else "below_h"


def in_small_k_band(k: int, r: int, h: int) -> bool:
    return h <= k <= h + r // 2 - 1


def _sweep_cell(job):
    alias, n, k, budget, symmetry = job
    H = _pattern(alias)
    try:
        res = exk(ExkInstance(n, k, H), budget, symmetry)
    except Exception as exc:  # a cell failure must not kill the sweep
        return alias, n, k, None, repr(exc)
    return alias, n, k, res, None


def sweep_rows(patterns: list[str], ns: list[int], ks: list[int], budget: int,
               symmetry: bool = False, jobs: int = 1, cache: ResultCache | None = None) -> list[dict]:
    cells = []
    for alias in patterns:
        H = _pattern(alias)
        cells += [(alias, n, k) for n in ns if n >= H.n for k in ks]
    results: dict = {}
    todo = []
    for alias, n, k in cells:
        rec = cache.lookup(n, k, _pattern(alias)) if cache else None
        if rec is not None and rec["status"] == "exact":
            results[(alias, n, k)] = (result_from_record(rec), None)
        else:
            todo.append((alias, n, k, budget, symmetry))
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            done = list(ex.map(_sweep_cell, todo))
    else:
        done = [_sweep_cell(j) for j in todo]
    for alias, n, k, res, err in done:
        # the parent is the only cache writer
        if res is not None and cache is not None:
            cache.put(_pattern(alias), res, __version__)
        results[(alias, n, k)] = (res, err)
    rows = []
    for alias, n, k in cells:
        H = _pattern(alias)
        res, err = results[(alias, n, k)]
        h, r = H.h, H.chi
        cand = [c for c in ((res.candidate_i, res.candidate_ii) if res else ()) if c is not None]
        rows.append({
            "pattern": alias, "n": n, "k": k, "h": h, "r": r,
            "value": res.value if res else None, "status": res.status if res else "error",
            "lower": res.lower if res else None, "upper": res.upper if res else None,
            "candidate_i": res.candidate_i if res else None,
            "candidate_ii": res.candidate_ii if res else None,
            "formula": max(cand) if cand else None,
            "matches_formula": (res.value == max(cand)) if res and res.exact and cand else None,
            "classification": res.classification if res else "error",
            "regime": regime(k, r, h), "small_k_band": in_small_k_band(k, r, h),
            "error": err,
        })
    return rows


def cmd_sweep(args, spec):
    rows = sweep_rows(args.patterns.split(",") if args.patterns else [], _int_range(args.n),
                      _int_range(args.k), args.budget, args.symmetry == "on", args.jobs,
                      _open_cache(args))
    partial = any(r["status"] != "exact" for r in rows)
    return {"rows": rows}, (EXIT_PARTIAL if partial else EXIT_OK)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcturan", description="Exact multicolor Turán toolkit")
    p.add_argument("--version", action="version", version=f"mcturan {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=["json", "csv"], default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--report", help="also write the report to this file")
    sub = p.add_subparsers(dest="command", required=True)

    def solver_flags(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        sp.add_argument("--symmetry", choices=["on", "off"], default="off")
        sp.add_argument("--no-cache", action="store_true")

    sp = sub.add_parser("exk", parents=[common], help="compute ex_k(n, H)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--method", choices=["bnb", "brute"], default="bnb")
    solver_flags(sp)

    sp = sub.add_parser("free", parents=[common], help="test a host for a multicolored pattern")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--host", required=True)
    sp.add_argument("--oracle", choices=["auto", "nested", "general"], default="auto")

    sp = sub.add_parser("nest", parents=[common], help="replace a coloring by its nested form")
    sp.add_argument("--host", required=True)
    sp.add_argument("--out")

    sp = sub.add_parser("pack", parents=[common], help="pack two graphs or check the packing results on small graphs")
    sp.add_argument("--g")
    sp.add_argument("--h")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--nmax", type=int, default=7)
    sp.add_argument("--exhaustive-max", type=int, default=5)
    sp.add_argument("--samples", type=int, default=10_000)

    sp = sub.add_parser("friendly", parents=[common], help="decide friendliness of a partite host")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--parts", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--host")
    sp.add_argument("--w", type=int, help="cross multiplicity of the complete host when --host is absent")

    sp = sub.add_parser("audit", parents=[common], help="exact rational audits")
    sp.add_argument("which", choices=["lemmaA1", "lemmaA2", "hj", "degree"])
    sp.add_argument("--rmax", type=int, default=100)
    sp.add_argument("--pattern")
    sp.add_argument("--random", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--h", type=int)
    sp.add_argument("--row", default="")
    sp.add_argument("--role", choices=["interior", "apex"], default="interior")

    sp = sub.add_parser("construct", parents=[common], help="write a candidate construction")
    sp.add_argument("--type", choices=["turan", "clique"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int)
    sp.add_argument("--h", type=int)
    sp.add_argument("--out")

    sp = sub.add_parser("sweep", parents=[common], help="grid of ex_k values with classifications")
    sp.add_argument("--patterns", default="k3")
    sp.add_argument("--n", default="3-5")
    sp.add_argument("--k", default="2-6")
    sp.add_argument("--jobs", type=int, default=1)
    solver_flags(sp)
    return p


COMMANDS = {
    "exk": cmd_exk, "free": cmd_free, "nest": cmd_nest, "pack": cmd_pack,
    "friendly": cmd_friendly, "audit": cmd_audit, "construct": cmd_construct, "sweep": cmd_sweep,
}


def run(spec: ExperimentSpec, args) -> tuple[dict, int]:
    body, code = COMMANDS[spec.command](args, spec)
    return {"meta": spec.meta(), "result": body}, code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "emit", "seed")}
    if args.command == "audit" and args.which == "degree" and None in (args.r, args.k, args.h):
        parser.error("audit degree needs --r, --k and --h")
    spec = ExperimentSpec(args.command, params, args.emit, getattr(args, "budget", DEFAULT_BUDGET),
                          args.seed)
    try:
        report, code = run(spec, args)
    except (UsageError, FormatError, ValueError) as exc:
        print(f"mcturan {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.emit == "csv":
        body = report["result"]
        rows = body["rows"] if "rows" in body else [body]
        text = _csv(rows)
    else:
        text = _dump(report)
    sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")
    if args.report:
        Path(args.report).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
