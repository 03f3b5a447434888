"""Run the exact-rational inequality audits and print worst-case margins."""

import argparse
import json
import time

from mcturan.audit import check_lemma_A1, check_lemma_A2, sweep_hj


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=100)
    ap.add_argument("--random", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out = {}
    for name, fn in [("lemmaA1", lambda: check_lemma_A1(args.rmax)),
                     ("lemmaA2", lambda: check_lemma_A2(args.rmax)),
                     ("hj", lambda: sweep_hj(args.random, seed=args.seed))]:
        t0 = time.perf_counter()
        rep = fn()
        d = rep.to_dict()
        d.pop("rows")
        d["seconds"] = round(time.perf_counter() - t0, 3)
        out[name] = d
        print(f"{name:8s} ok={rep.ok} checked={rep.checked} min_margin={rep.min_margin} "
              f"worst={rep.worst}")
    print(json.dumps({"seed": args.seed, "reports": out}, indent=2, default=str))


if __name__ == "__main__":
    main()
