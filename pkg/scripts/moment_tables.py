"""Exact κ(R_k) and κ(T_k) chains for one (m, n), checked against the recurrence.

    python scripts/moment_tables.py --m 3 --n 5 --k-max 10
"""

import argparse

from bureshall.biorth import EnsembleParams
from bureshall.exact import format_rational, to_float
from bureshall.moments import ValidityError, coeff_g, moment_R, moment_T


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--k-max", type=int, default=10)
    args = ap.parse_args()
    p = EnsembleParams(args.m, args.n)
    print(f"(m, n) = ({p.m}, {p.n}), alpha = {p.alpha}, d = {p.d}")
    print(f"{'k':>3}  {'R_k':>28}  {'float':>14}  {'closure':>8}  T_k")
    for k in range(-3, args.k_max + 1):
        try:
            r = moment_R(k, p)
        except ValidityError as e:
            print(f"{k:>3}  refused: {e}")
            continue
        closure = ""
        try:
            res = coeff_g(1, k, p) * moment_R(k + 2, p) - coeff_g(2, k, p) * r - coeff_g(3, k, p) * moment_R(k - 2, p)
            closure = "exact" if res == 0 else "FAIL"
        except ValidityError:
            pass
        try:
            t = str(moment_T(k, p, continued=p.boundary and k % 2 == 1 and k > 0))
        except ValidityError:
            t = "-"
        print(f"{k:>3}  {format_rational(r):>28}  {to_float(r):>14.6g}  {closure:>8}  {t}")


if __name__ == "__main__":
    main()
