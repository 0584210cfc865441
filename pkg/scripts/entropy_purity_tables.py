"""Exact mean entropy and purity for 1 <= m <= n <= N, with float columns.

    python scripts/entropy_purity_tables.py --max-n 8 --out tables.csv
"""

import argparse
import csv
import math
import sys
import time

from bureshall.biorth import EnsembleParams
from bureshall.exact import format_rational, to_float
from bureshall.moments import mean_entropy, mean_purity


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh)
    w.writerow(["m", "n", "purity", "purity_float", "entropy", "entropy_float", "entropy_over_log_m"])
    for m in range(1, args.max_n + 1):
        for n in range(m, args.max_n + 1):
            p = EnsembleParams(m, n)
            pur, ent = mean_purity(p), mean_entropy(p)
            s = to_float(ent)
            w.writerow([m, n, format_rational(pur), f"{float(pur):.12f}", str(ent), f"{s:.12f}",
                        f"{s / math.log(m):.6f}" if m > 1 else ""])
    if args.out:
        fh.close()
    print(f"# {time.perf_counter() - t0:.2f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
