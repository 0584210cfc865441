"""Command-line front end: moment tables, entropy/purity tables, identity
verification, sampling and quadrature comparisons.

Exact values are always printed next to floats; floats are for reading only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import _hooks
from .biorth import EnsembleParams
from .exact import DEFAULT_PRECISION, DigammaNumber, format_rational, to_float
from .moments import mean_entropy, mean_purity, moment_R, moment_T
from .suite import GROUPS, SuiteConfig, run_suite, select

FORMATS = ("csv", "json")


@dataclass
class RunConfig:
    """Validated settings of one CLI invocation."""

    command: str
    m: tuple = (2,)
    n: tuple = (3,)
    k_lo: Fraction = Fraction(1)
    k_hi: Fraction = Fraction(4)
    parity: str = "all"
    precision: int = DEFAULT_PRECISION
    quad_nodes: int = 40
    seed: int = 0
    count: int = 100_000
    burn_in: int = 10_000
    format: str = "csv"
    out: str | None = None
    tol: float = 1e-8
    only: tuple = ()
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.k_lo > self.k_hi:
            raise ValueError("empty k-range")
        if not self.ks():
            raise ValueError("k-range contains no integer of the requested parity")
        if not any(m <= n for m in self.m for n in self.n):
            raise ValueError("need m <= n for at least one grid point")

    def grid(self):
        return [EnsembleParams(m, n) for m in self.m for n in self.n if m <= n]

    def ks(self):
        lo, hi = int(-(-self.k_lo // 1)), int(self.k_hi // 1)
        ks = range(lo, hi + 1)
        if self.parity == "even":
            return [k for k in ks if k % 2 == 0]
        if self.parity == "odd":
            return [k for k in ks if k % 2]
        return list(ks)


def _int_range(text: str) -> tuple:
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
        if lo > hi:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return tuple(range(lo, hi + 1))
    return (int(text),)


def _k_range(text: str):
    if ".." in text:
        a, b = text.split("..", 1)
        return Fraction(a), Fraction(b)
    return Fraction(text), Fraction(text)


# ---------------------------------------------------------------- output

def _emit(cfg: RunConfig, params: dict, rows: list, diagnostics: dict, columns: list | None = None):
    if cfg.format == "json":
        text = json.dumps({"params": params, "results": rows, "diagnostics": diagnostics}, indent=2) + "\n"
    else:
        cols = columns or (list(rows[0]) if rows else [])
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow({c: r.get(c, "") for c in cols})
        text = buf.getvalue()
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _digamma_cols(prefix: str, v: DigammaNumber, precision: int) -> dict:
    return {
        f"{prefix}_rational": format_rational(v.rational_part),
        f"{prefix}_gamma": format_rational(v.gamma_coeff),
        f"{prefix}_ln2": format_rational(v.ln2_coeff),
        f"{prefix}_float": repr(to_float(v, precision)),
    }


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


# ---------------------------------------------------------------- commands

def _t_moment(k, params):
    # odd T moments at α = -1/2 come from the continued k = -1 step
    return moment_T(k, params, continued=params.boundary and k % 2 == 1 and k > 0)


MOMENT_COLUMNS = ["m", "n", "k", "R_exact", "R_float", "T_rational", "T_gamma", "T_ln2", "T_float", "error"]


def cmd_moments(cfg: RunConfig) -> int:
    rows, failures = [], 0
    for params in cfg.grid():
        for k in cfg.ks():
            row = {"m": params.m, "n": params.n, "k": k}
            errs = []
            try:
                r = moment_R(k, params)
                row["R_exact"] = format_rational(r)
                row["R_float"] = _fmt_float(to_float(r, cfg.precision))
            except Exception as e:
                errs.append(f"R: {e}")
            if not cfg.extra.get("no_T"):
                try:
                    t = _t_moment(k, params)
                    row.update({c.replace("t_", "T_"): v for c, v in _digamma_cols("t", t.value, cfg.precision).items()})
                except Exception as e:
                    errs.append(f"T: {e}")
            if errs:
                failures += 1
                row["error"] = "; ".join(errs)
            rows.append(row)
    _emit(cfg, {"m": list(cfg.m), "n": list(cfg.n), "k": [str(cfg.k_lo), str(cfg.k_hi)]}, rows,
          {"failed_rows": failures}, MOMENT_COLUMNS)
    return 1 if failures else 0


ENTROPY_COLUMNS = ["m", "n", "purity_exact", "purity_float", "entropy_rational", "entropy_gamma", "entropy_ln2",
                   "entropy_float", "error"]


def cmd_entropy(cfg: RunConfig) -> int:
    rows, failures = [], 0
    for params in cfg.grid():
        row = {"m": params.m, "n": params.n}
        try:
            p = mean_purity(params)
            s = mean_entropy(params)
            row["purity_exact"] = format_rational(p)
            row["purity_float"] = _fmt_float(to_float(p, cfg.precision))
            row.update({c.replace("s_", "entropy_"): v for c, v in _digamma_cols("s", s, cfg.precision).items()})
        except Exception as e:
            failures += 1
            row["error"] = f"{type(e).__name__}: {e}"
        rows.append(row)
    _emit(cfg, {"m": list(cfg.m), "n": list(cfg.n)}, rows, {"failed_rows": failures}, ENTROPY_COLUMNS)
    return 1 if failures else 0


def cmd_verify(cfg: RunConfig) -> int:
    names = select(cfg.only)
    suite_cfg = SuiteConfig(points=cfg.extra.get("points", 20), precision=cfg.precision,
                            quad_nodes=cfg.quad_nodes, seed=cfg.seed or SuiteConfig.seed)
    perturb = cfg.extra.get("perturb")
    if perturb:
        with _hooks.perturbed(perturb):
            results = run_suite(cfg.grid(), names, suite_cfg)
    else:
        results = run_suite(cfg.grid(), names, suite_cfg)
    failed = [n for n, r in results.items() if not r.passed(cfg.tol)]
    report = {
        "params": {"grid": [[p.m, p.n] for p in cfg.grid()], "tol": cfg.tol, "points": suite_cfg.points,
                   "precision": cfg.precision, "perturbed": perturb},
        "results": {n: {**asdict(r), "passed": r.passed(cfg.tol)} for n, r in results.items()},
        "diagnostics": {"failed": failed, "all_passed": not failed},
    }
    text = json.dumps(report, indent=2, default=str) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if failed:
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def cmd_sample(cfg: RunConfig) -> int:
    from .oracle import estimate_statistic, mcmc_sample

    params = cfg.grid()[0]
    batch = mcmc_sample(params, cfg.count + cfg.burn_in, cfg.burn_in, cfg.seed)
    stat = cfg.extra.get("estimate")
    if stat:
        k = float(cfg.k_lo)
        est = estimate_statistic(batch, stat, k)
        exact = None
        if stat == "entropy":
            exact = to_float(mean_entropy(params))
        elif stat == "purity":
            exact = float(mean_purity(params))
        elif stat == "trace":
            exact = float(params.d)
        elif stat in ("R_k", "T_k") and k == int(k):
            v = moment_R(int(k), params) if stat == "R_k" else _t_moment(int(k), params).value
            exact = to_float(v)
        result = {"statistic": stat, "mean": est.mean, "std_error": est.std_error, "count": est.count,
                  "iat": est.iat, "exact": exact}
        if exact is not None:
            result["z"] = (est.mean - exact) / est.std_error if est.std_error else 0.0
            result["within_3_sigma"] = est.within(exact)
        report = {"params": batch.metadata()["params"], "results": result, "diagnostics": batch.metadata()}
        text = json.dumps(report, indent=2) + "\n"
        if cfg.out:
            Path(cfg.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return 0
    if cfg.out and cfg.format == "csv":
        batch.to_csv(cfg.out)
        return 0
    rows = [{f"x{i + 1}": repr(float(v)) for i, v in enumerate(row)} for row in batch.configurations]
    _emit(cfg, batch.metadata()["params"], rows, batch.metadata(), [f"x{i + 1}" for i in range(params.m)])
    return 0


def cmd_oracle(cfg: RunConfig) -> int:
    from .oracle import direct_moment_quadrature

    weight = cfg.extra.get("weight", "plain")
    rows, failures = [], 0
    for params in cfg.grid():
        for k in cfg.ks():
            row = {"m": params.m, "n": params.n, "k": k}
            try:
                if weight == "plain":
                    ex = moment_R(k, params)
                    row["exact"] = format_rational(ex)
                else:
                    ex = _t_moment(k, params).value
                    row["exact"] = str(ex)
                exf = to_float(ex, cfg.precision)
                q = direct_moment_quadrature(k, params, weight)
                diff = abs(q - exf)
                row.update(exact_float=_fmt_float(exf), quadrature=_fmt_float(q), abs_diff=_fmt_float(diff),
                           rel_diff=_fmt_float(diff / abs(exf) if exf else diff))
                if (diff / abs(exf) if exf else diff) > cfg.tol:
                    failures += 1
                    row["error"] = "tolerance exceeded"
            except Exception as e:
                failures += 1
                row["error"] = f"{type(e).__name__}: {e}"
            rows.append(row)
    _emit(cfg, {"m": list(cfg.m), "n": list(cfg.n), "weight": weight, "tol": cfg.tol}, rows,
          {"failed_rows": failures},
          ["m", "n", "k", "exact", "exact_float", "quadrature", "abs_diff", "rel_diff", "error"])
    return 1 if failures else 0


COMMANDS = {
    "moments": cmd_moments,
    "entropy": cmd_entropy,
    "verify": cmd_verify,
    "sample": cmd_sample,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bureshall", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m_default="2", n_default="3", k_default="1..4", fmt="csv"):
        p.add_argument("--m", type=_int_range, default=_int_range(m_default), help="m or range a..b")
        p.add_argument("--n", type=_int_range, default=_int_range(n_default), help="n or range a..b")
        p.add_argument("--k", type=_k_range, default=_k_range(k_default), help="k or range a..b")
        p.add_argument("--parity", choices=("all", "even", "odd"), default="all")
        p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="working bits")
        p.add_argument("--quad-nodes", type=int, default=40)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=FORMATS, default=fmt)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--tol", type=float, default=1e-8)
        return p

    p = common(sub.add_parser("moments", help="table of κ(R_k) and κ(T_k)"))
    p.add_argument("--no-T", action="store_true", help="skip the T_k columns")
    common(sub.add_parser("entropy", help="mean entropy and purity over an (m, n) grid"), "1..3", "1..4")
    p = common(sub.add_parser("verify", help="identity residual report (JSON)"), "1..4", "1..6", fmt="json")
    p.add_argument("--only", action="append", default=[], help=f"identity or group ({', '.join(GROUPS)})")
    p.add_argument("--points", type=int, default=20, help="quasi-random points per identity")
    p.add_argument("--perturb", default=None, help="test mode: scale one coefficient by 1.001")
    p = common(sub.add_parser("sample", help="MCMC samples or a statistic estimate"), "3", "4")
    p.add_argument("--count", type=int, default=100_000, help="retained samples")
    p.add_argument("--burn-in", type=int, default=10_000)
    p.add_argument("--estimate", choices=("R_k", "T_k", "entropy", "purity", "trace"), default=None)
    p = common(sub.add_parser("oracle", help="exact moments vs direct quadrature (m <= 3)"), k_default="1..4")
    p.add_argument("--weight", choices=("plain", "log"), default="plain")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    extra = {}
    for key in ("no_T", "points", "perturb", "estimate", "weight"):
        if hasattr(ns, key):
            extra[key] = getattr(ns, key)
    m, n = ns.m, ns.n
    return RunConfig(
        command=ns.command,
        m=m,
        n=n,
        k_lo=ns.k[0],
        k_hi=ns.k[1],
        parity=ns.parity,
        precision=ns.precision,
        quad_nodes=ns.quad_nodes,
        seed=ns.seed,
        count=getattr(ns, "count", 100_000),
        burn_in=getattr(ns, "burn_in", 10_000),
        format=ns.format,
        out=ns.out,
        tol=ns.tol,
        only=tuple(getattr(ns, "only", ()) or ()),
        extra=extra,
    )


def _glue_negative_values(argv):
    # let "--k -1..1" through argparse, which would read -1..1 as an option
    out, it = [], iter(argv)
    for a in it:
        if a in ("--k", "--m", "--n"):
            v = next(it, None)
            out.append(a if v is None else f"{a}={v}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    ns = parser.parse_args(_glue_negative_values(argv))
    try:
        cfg = config_from_args(ns)
    except ValueError as e:
        parser.error(str(e))
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    raise SystemExit(main())
