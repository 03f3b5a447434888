"""Exhaustive and sampled check that every pair meeting a packing hypothesis packs."""

import argparse
import json
import time

from mcturan.packing import verify_packing_theorems


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=7)
    ap.add_argument("--exhaustive-max", type=int, default=5)
    ap.add_argument("--samples", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    t0 = time.perf_counter()
    rep = verify_packing_theorems(args.nmax, args.exhaustive_max, args.samples, args.seed)
    print(json.dumps({**rep.to_dict(), "seed": args.seed,
                      "seconds": round(time.perf_counter() - t0, 2)}, indent=2))


if __name__ == "__main__":
    main()
