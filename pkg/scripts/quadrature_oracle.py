"""Exact moments against direct quadrature of the eigenvalue density (m <= 3)."""

import argparse
import time

from bureshall.biorth import EnsembleParams
from bureshall.moments import moment_R, moment_T
from bureshall.oracle import direct_moment_quadrature

SETS = [(1, 1), (1, 4), (2, 2), (2, 3), (2, 5), (3, 3), (3, 4), (3, 6)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=4)
    args = ap.parse_args()
    t0 = time.perf_counter()
    print(f"{'m':>2} {'n':>2} {'k':>2}  {'rel err R':>10}  {'rel err T':>10}")
    for mn in SETS:
        p = EnsembleParams(*mn)
        for k in range(0, args.k_max + 1):
            r = float(moment_R(k, p))
            er = abs(direct_moment_quadrature(k, p) - r) / r
            et = ""
            if not (p.boundary and k % 2 == 0):
                t = float(moment_T(k, p, continued=p.boundary))
                q = direct_moment_quadrature(k, p, "log")
                et = f"{abs(q - t) / max(abs(t), 1e-300):.2e}"
            print(f"{p.m:>2} {p.n:>2} {k:>2}  {er:>10.2e}  {et:>10}")
    print(f"# {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
