"""Random connected graphs of larger order; reports the largest ratios seen.

    python3 scripts/sample_check.py --lo 12 --hi 20 --samples 100000 --seed 1
"""
import argparse
import sys

from rqv.harness import VerifyRunConfig, bound_branch, verify_conjecture


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=12)
    ap.add_argument("--hi", type=int, default=20)
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()
    res = verify_conjecture(VerifyRunConfig("sample", (args.lo, args.hi), samples=args.samples,
                                            seed=args.seed, threads=args.threads))
    print(f"checked {res.graphs_checked} graphs, violations {len(res.violations)}, "
          f"near misses {len(res.near_misses)}")
    for rec in res.top:
        b = bound_branch(rec.n)[1]
        print(f"  n={rec.n:2d} m={rec.m:3d} ratio={rec.ratio.mid:.6f} bound={b.mid:.6f} {rec.graph6}")
    return 0 if res.passed else 1


if __name__ == "__main__":
    sys.exit(main())
