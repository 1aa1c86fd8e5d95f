"""Table of the q/R maximiser per order next to K_n and S_n.

    python3 scripts/extremal_table.py --hi 8
"""
import argparse

from rqv.enumeration import write_graph6
from rqv.graph import make_family
from rqv.harness import find_extremal
from rqv.invariants import randic_index
from rqv.spectral import q_radius


def ratio(g):
    return (q_radius(g).bracket / randic_index(g)).mid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--hi", type=int, default=8)
    ap.add_argument("--families-to", type=int, default=30)
    args = ap.parse_args()
    print(f"{'n':>3} {'max q/R':>12} {'argmax':>10} {'K_n':>10}")
    for n in range(4, args.hi + 1):
        best = find_extremal(n).max_ratio_graph
        kn = make_family("complete", n)
        tag = "K_n" if best.graph6 == write_graph6(kn).decode() else best.graph6
        print(f"{n:3d} {best.ratio.mid:12.9f} {tag:>10} {ratio(kn):10.6f}")
    print()
    print(f"{'n':>3} {'K_n':>10} {'S_n':>10}")
    for n in range(4, args.families_to + 1):
        print(f"{n:3d} {ratio(make_family('complete', n)):10.6f} {ratio(make_family('star', n)):10.6f}")


if __name__ == "__main__":
    main()
