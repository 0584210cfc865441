"""The identity-verification suite: every residual check, grouped by name and
evaluated on quasi-random points."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np
from scipy.stats import qmc

from . import _appendix as A
from .biorth import (
    EnsembleParams,
    four_term_residual_poly,
    single_sum_residual,
    structure_residual_poly,
)
from .kernels import (
    KernelWorkspace,
    cd_residual,
    deriv_residual,
    density_moment,
    four_term_residual_transform,
    single_sum_residual_transform,
    square_weight_expected,
    square_weight_integral,
    structure_residual_transform,
    weighted_inner,
)
from .moments import (
    InvariantViolation,
    coeff_g,
    coeff_g_prime,
    mean_entropy,
    mean_purity,
    moment_R,
    ValidityError,
    verify_intid,
    verify_rklast,
)

GROUPS = {
    "structure": ("structure:p", "structure:q", "structure:P", "structure:Q"),
    "four-term": ("four-term:p", "four-term:q", "four-term:P", "four-term:Q"),
    "single-sum": ("single-sum:p-hat", "single-sum:q-check", "single-sum:pq-check",
                   "single-sum:P-hat", "single-sum:Q-check"),
    "cd": ("cd:pq", "cd:Pq", "cd:pQ", "cd:PQ"),
    "biorth": ("biorth",),
    "square-weight": ("square-weight",),
    "deriv": ("deriv:K01", "deriv:K10", "deriv:onepoint"),
    "rklast": ("rklast",),
    "intid": ("intid",),
    "closure": ("closure",),
    "specialization": ("specialization",),
    "entropy": ("entropy",),
    "purity": ("purity",),
    "density": ("density",),
}

ALL_IDENTITIES = tuple(name for names in GROUPS.values() for name in names)


@dataclass
class SuiteConfig:
    """Evaluation settings for :func:`run_suite`."""

    points: int = 20
    x_range: tuple = (0.05, 25.0)
    precision: int = 128
    quad_nodes: int = 40
    seed: int = 12345
    k_values: tuple = (1, 2, 3)


@dataclass
class IdentityResult:
    name: str
    max_residual: float
    evaluations: int
    worst_at: dict = field(default_factory=dict)
    error: str | None = None

    def passed(self, tol: float) -> bool:
        return self.error is None and self.max_residual < tol


def select(only: Iterable[str] | None) -> tuple:
    """Identity names matching group names or exact identity names."""
    if not only:
        return ALL_IDENTITIES
    out = []
    for item in only:
        if item in GROUPS:
            out.extend(GROUPS[item])
        elif item in ALL_IDENTITIES:
            out.append(item)
        else:
            raise ValueError(f"unknown identity {item!r}; groups: {', '.join(GROUPS)}")
    return tuple(dict.fromkeys(out))


def quasi_random_points(n: int, dim: int, lo: float, hi: float, seed: int) -> np.ndarray:
    """Scrambled Halton points mapped to [lo, hi]^dim."""
    u = qmc.Halton(d=dim, scramble=True, seed=seed).random(n)
    return lo + (hi - lo) * u


def _run_points(name, fn: Callable, args_list) -> IdentityResult:
    worst, at = 0.0, {}
    for args in args_list:
        r = float(fn(*args))
        if not r <= worst:
            worst, at = r, {"args": [float(a) if not isinstance(a, str) else a for a in args]}
    return IdentityResult(name, worst, len(args_list), at)


def _exact_check(name, checks) -> IdentityResult:
    bad = [c for c, ok in checks if not ok]
    return IdentityResult(name, float(len(bad)), len(checks), {"failed": bad[:5]} if bad else {})


def evaluate(name: str, params: EnsembleParams, cfg: SuiteConfig, ws: KernelWorkspace | None = None) -> IdentityResult:
    """Max residual of one identity at one parameter pair.

    Numerical identities report relative residuals; exact ones report the
    number of failing cases (so 0 means pass).
    """
    ws = ws or KernelWorkspace(params, precision=cfg.precision, quad_nodes=cfg.quad_nodes)
    m = params.m
    lo, hi = cfg.x_range
    rng_seed = cfg.seed + 1000 * m + params.n
    xs = quasi_random_points(cfg.points, 1, lo, hi, rng_seed)[:, 0]
    ks = [i % (m + 2) for i in range(cfg.points)]
    try:
        if name.startswith("structure:") or name.startswith("four-term:"):
            group, kind = name.split(":")
            if kind in ("p", "q"):
                f = structure_residual_poly if group == "structure" else four_term_residual_poly
                return _run_points(name, lambda k, x: f(kind, k, x, params, cfg.precision), list(zip(ks, xs)))
            f = structure_residual_transform if group == "structure" else four_term_residual_transform
            return _run_points(name, lambda k, x: f(kind, k, x, ws), list(zip(ks, xs)))
        if name.startswith("single-sum:"):
            kind = name.split(":")[1]
            if kind in ("p-hat", "q-check", "pq-check"):
                return _run_points(name, lambda x: single_sum_residual(kind, x, params, cfg.precision), [(x,) for x in xs])
            return _run_points(name, lambda x: single_sum_residual_transform(kind, x, ws), [(x,) for x in xs])
        if name.startswith("cd:"):
            which = name.split(":")[1]
            pts = quasi_random_points(cfg.points, 2, lo, hi, rng_seed)
            return _run_points(name, lambda x, y: cd_residual(which, x, y, ws), [tuple(p) for p in pts])
        if name.startswith("deriv:"):
            which = name.split(":")[1]
            return _run_points(name, lambda x: deriv_residual(which, x, ws), [(x,) for x in xs])
        if name == "biorth":
            pairs = [(k, l) for k in range(6) for l in range(6)]
            return _run_points(name, lambda k, l: abs(weighted_inner(k, l, ws) - (k == l)), pairs)
        if name == "square-weight":
            cases = [(i, j, w) for i in range(6) for j in range(max(0, i - 2), i + 3) for w in ("x", "y")]

            def f(i, j, w):
                return abs(square_weight_integral(i, j, w, ws) - float(square_weight_expected(i, j, w, params)))

            return _run_points(name, f, cases)
        if name == "rklast":
            return _run_points(name, lambda k: verify_rklast(k, params, ws), [(k,) for k in cfg.k_values])
        if name == "intid":
            return _run_points(name, lambda k: verify_intid(k, params, ws), [(k,) for k in cfg.k_values])
        if name == "density":
            target = float(2 * params.a + m + 1) / 2
            return _run_points(
                name,
                lambda k: abs(density_moment(k, ws) - (1.0 if k == 0 else target)),
                [(0,), (1,)],
            )
        if name == "closure":
            checks = []
            for k in (-1, 0, 1, 2, 3):
                try:
                    r = [moment_R(j, params) for j in (k + 2, k, k - 2)]
                except ValidityError:
                    continue
                ok = coeff_g(1, k, params) * r[0] - coeff_g(2, k, params) * r[1] - coeff_g(3, k, params) * r[2] == 0
                checks.append((k, ok))
            return _exact_check(name, checks)
        if name == "specialization":
            a, mm = params.a, Fraction(m)
            cases = [
                ("g1(0)", coeff_g(1, 0, params), A.g1_at_0(a, mm, 0)),
                ("g2(0)", coeff_g(2, 0, params), A.g2_at_0(a, mm, 0)),
                ("g3(0)", coeff_g(3, 0, params), A.g3_at_0(a, mm, 0)),
                ("g1(-1)", coeff_g(1, -1, params), A.g1_at_m1(a, mm, 0)),
                ("g2(-1)", coeff_g(2, -1, params), A.g2_at_m1(a, mm, 0)),
                ("g3(-1)", coeff_g(3, -1, params), A.g3_at_m1(a, mm, 0)),
                ("g1'(-1)", coeff_g_prime(1, -1, params), A.g1p_at_m1(a, mm, 0)),
                ("g2'(-1)", coeff_g_prime(2, -1, params), A.g2p_at_m1(a, mm, 0)),
                ("g3'(-1)", coeff_g_prime(3, -1, params), A.g3p_at_m1(a, mm, 0)),
            ]
            return _exact_check(name, [(lab, x == y) for lab, x, y in cases])
        if name in ("entropy", "purity"):
            try:
                (mean_entropy if name == "entropy" else mean_purity)(params)
                return IdentityResult(name, 0.0, 1)
            except InvariantViolation as e:
                return IdentityResult(name, 1.0, 1, error=str(e))
    except Exception as e:  # reported per identity so one failure does not hide the rest
        return IdentityResult(name, float("inf"), 0, error=f"{type(e).__name__}: {e}")
    raise ValueError(f"unknown identity {name!r}")


def run_suite(grid: Iterable[EnsembleParams], names: Iterable[str], cfg: SuiteConfig | None = None) -> dict:
    """{identity: IdentityResult aggregated (max) over the grid}."""
    cfg = cfg or SuiteConfig()
    names = tuple(names)
    out: dict[str, IdentityResult] = {}
    for params in grid:
        ws = KernelWorkspace(params, precision=cfg.precision, quad_nodes=cfg.quad_nodes)
        for name in names:
            r = evaluate(name, params, cfg, ws)
            prev = out.get(name)
            if prev is None or r.error or (prev.error is None and r.max_residual > prev.max_residual):
                if prev is not None and prev.error and not r.error:
                    continue
                at = dict(r.worst_at, m=params.m, n=params.n)
                r = IdentityResult(name, r.max_residual, r.evaluations + (prev.evaluations if prev else 0), at, r.error)
                out[name] = r
            else:
                prev.evaluations += r.evaluations
    return out
