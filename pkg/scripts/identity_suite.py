"""Worst residual of every identity over a parameter grid."""

import argparse
import time

from bureshall.biorth import EnsembleParams
from bureshall.suite import ALL_IDENTITIES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--extra-n", type=int, default=3, help="n runs from m to m + extra-n")
    ap.add_argument("--points", type=int, default=100)
    args = ap.parse_args()
    grid = [EnsembleParams(m, n) for m in range(1, args.max_m + 1) for n in range(m, m + args.extra_n + 1)]
    t0 = time.perf_counter()
    results = run_suite(grid, ALL_IDENTITIES, SuiteConfig(points=args.points))
    for name, r in results.items():
        where = f"(m, n) = ({r.worst_at.get('m')}, {r.worst_at.get('n')})" if r.worst_at else ""
        print(f"{name:22s} {r.max_residual:10.2e}  {r.evaluations:6d} evals  {where}  {r.error or ''}")
    print(f"# {len(grid)} parameter sets, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
