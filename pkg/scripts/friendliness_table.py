"""Friendliness threshold of the one-pair K_3 host as the cross multiplicity grows."""

import argparse

from mcturan.friendliness import PartiteHost, is_h_friendly, kplus_friendly_probe
from mcturan.graphs import PatternMultigraph, clique_pattern, cycle_pattern


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=8)
    args = ap.parse_args()
    K3 = clique_pattern(3)
    print("k,c,friendly,counterexample")
    for k in range(4, args.kmax + 1):
        for c in range(0, k + 1):
            rep = is_h_friendly(PartiteHost.complete(2, 1, c, k), K3)
            print(f"{k},{c},{rep.friendly},{'' if rep.counterexample is None else list(rep.counterexample)}")
    reduced = PatternMultigraph.from_edges(3, [(0, 1, 3), (1, 2), (0, 2)], name="C5_c")
    for H, k in [(K3, 4), (reduced, 8), (cycle_pattern(5), 8), (clique_pattern(4), 8)]:
        rep = kplus_friendly_probe(H, k)
        print(f"# probe {H.name} k={k} t={rep['t']}: friendly={rep['friendly']} ({rep['evidence']})")


if __name__ == "__main__":
    main()
