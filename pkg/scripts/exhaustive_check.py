"""Exhaustive check of q/R against the bound for every connected graph.

    python3 scripts/exhaustive_check.py --lo 4 --hi 9
"""
import argparse
import sys
import time

from rqv.harness import VerifyRunConfig, verify_conjecture


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=4)
    ap.add_argument("--hi", type=int, default=8)
    args = ap.parse_args()
    ok = True
    for n in range(args.lo, args.hi + 1):
        t0 = time.perf_counter()
        res = verify_conjecture(VerifyRunConfig("exhaustive", n))
        best = res.max_ratio_graph
        print(f"n={n:2d} graphs={res.graphs_checked:7d} violations={len(res.violations)} "
              f"witnesses={res.equality_witnesses} max={best.ratio.mid:.9f} "
              f"({time.perf_counter() - t0:.1f}s)")
        ok &= res.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
