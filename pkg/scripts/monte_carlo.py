"""Metropolis estimates of entropy and purity against the exact values.

    python scripts/monte_carlo.py --samples 100000 --seed 2026
"""

import argparse
import time

from bureshall.biorth import EnsembleParams
from bureshall.exact import to_float
from bureshall.moments import mean_entropy, mean_purity
from bureshall.oracle import estimate_statistic, mcmc_sample


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--burn-in", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=2026)
    ap.add_argument("--sets", default="2,2;2,3;3,4;4,6")
    args = ap.parse_args()
    for item in args.sets.split(";"):
        m, n = map(int, item.split(","))
        p = EnsembleParams(m, n)
        t0 = time.perf_counter()
        batch = mcmc_sample(p, args.samples + args.burn_in, args.burn_in, args.seed)
        dt = time.perf_counter() - t0
        print(f"({m}, {n})  acceptance {batch.acceptance_rate:.3f}  {dt:.1f}s")
        for stat, exact in (("entropy", to_float(mean_entropy(p))), ("purity", float(mean_purity(p))),
                            ("trace", float(p.d))):
            est = estimate_statistic(batch, stat)
            z = (est.mean - exact) / est.std_error if est.std_error else 0.0
            print(f"  {stat:8s} exact {exact:.6f}  mc {est.mean:.6f} ± {est.std_error:.6f}  "
                  f"z {z:+.2f}  iat {est.iat:.1f}")


if __name__ == "__main__":
    main()
