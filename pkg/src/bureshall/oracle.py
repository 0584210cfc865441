"""Independent ground truth: direct quadrature for m ≤ 3 and a Metropolis
sampler of the unconstrained eigenvalue density

    h(x) ∝ Π_{i<j} (x_i - x_j)² / (x_i + x_j) · Π_i x_i^α e^{-x_i}.
"""

from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy import integrate, special

from .biorth import EnsembleParams
from .exact import DomainError

__all__ = [
    "Estimate",
    "SampleBatch",
    "UnsupportedDimensionError",
    "direct_moment_quadrature",
    "estimate_statistic",
    "integrated_autocorrelation_time",
    "mcmc_sample",
]


class UnsupportedDimensionError(ValueError):
    """Direct quadrature is only implemented for m ≤ 3."""


# ---------------------------------------------------------------- quadrature

_QUAD_OPTS = dict(epsabs=0.0, epsrel=1e-13, limit=200)


def _simplex_average(m: int, a: float, f):
    with warnings.catch_warnings():
        # QUADPACK flags roundoff once it is at machine precision
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        return _simplex_average_impl(m, a, f)


def _simplex_average_impl(m: int, a: float, f):
    """Average of a symmetric f(u) over the simplex Σu = 1 under Δ(u)²/Π(u_i+u_j) Π u_i^α.

    By symmetry the integral is restricted to the region where u_1 is the
    largest coordinate; there the only vanishing pair sum factors out.
    """
    if m == 1:
        return f((1.0,))
    if m == 2:
        def w(s):
            return (2 * s - 1) ** 2 * (s * (1 - s)) ** a

        num = integrate.quad(lambda s: w(s) * f((s, 1 - s)), 0.5, 1, **_QUAD_OPTS)[0]
        den = integrate.quad(w, 0.5, 1, **_QUAD_OPTS)[0]
        return num / den
    if m == 3:
        def w(v, s):
            u2, u3 = (1 - s) * v, (1 - s) * (1 - v)
            # (u2-u3)²/(u2+u3) = (1-s)(2v-1)², times the Jacobian (1-s)
            return (
                (s - u2) ** 2 * (s - u3) ** 2 / ((s + u2) * (s + u3))
                * (1 - s) ** 2 * (2 * v - 1) ** 2
                * (s * u2 * u3) ** a
            )

        def lo(s):
            return max(0.0, 1 - s / (1 - s))

        def hi(s):
            return min(1.0, s / (1 - s))

        def region(g):
            total = 0.0
            for s0, s1 in ((1 / 3, 0.5), (0.5, 1.0)):
                total += integrate.dblquad(g, s0, s1, lo, hi, epsabs=0.0, epsrel=1e-12)[0]
            return total

        num = region(lambda v, s: w(v, s) * f((s, (1 - s) * v, (1 - s) * (1 - v))))
        den = region(w)
        return num / den
    raise UnsupportedDimensionError(f"direct quadrature supports m <= 3, got m={m}")


def direct_moment_quadrature(k: float, params: EnsembleParams, weight: str = "plain") -> float:
    """E[Σ x_i^k] (``weight='plain'``) or E[Σ x_i^k ln x_i] (``'log'``) by direct integration.

    With x = r u, Σu = 1, the radial part is Gamma(d)-distributed, so

        E[Σ x^k] = Γ(d+k)/Γ(d) · ⟨Σ u^k⟩,
        E[Σ x^k ln x] = Γ(d+k)/Γ(d) · (ψ(d+k) ⟨Σ u^k⟩ + ⟨Σ u^k ln u⟩),

    and the simplex averages are computed by adaptive quadrature with
    numerical normalization.
    """
    m = params.m
    if m > 3:
        raise UnsupportedDimensionError(f"direct quadrature supports m <= 3, got m={m}")
    if weight not in ("plain", "log"):
        raise ValueError("weight must be 'plain' or 'log'")
    a = float(params.a)
    d = float(params.d)
    k = float(k)
    if not k > -(a + 1):
        raise DomainError(f"moment diverges for k={k} (need k > {-(a + 1)})")
    radial = math.exp(special.gammaln(d + k) - special.gammaln(d))
    plain = _simplex_average(m, a, lambda u: sum(ui**k for ui in u))
    if weight == "plain":
        return radial * plain
    logpart = _simplex_average(m, a, lambda u: sum(ui**k * math.log(ui) for ui in u if ui > 0))
    return radial * (special.digamma(d + k) * plain + logpart)


# ---------------------------------------------------------------- sampling

ACCEPTANCE_BOUNDS = (0.25, 0.40)


@dataclass
class SampleBatch:
    """Post-burn-in configurations of the unconstrained ensemble, one row each."""

    params: EnsembleParams
    configurations: np.ndarray
    rng_seed: int
    acceptance_rate: float
    burn_in: int
    step_sizes: tuple = ()
    acceptance_bounds: tuple = ACCEPTANCE_BOUNDS
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.configurations = np.asarray(self.configurations, dtype=float)
        if self.configurations.ndim != 2 or self.configurations.shape[1] != self.params.m:
            raise ValueError("configurations must have shape (count, m)")
        if self.configurations.size and not np.all(self.configurations > 0):
            raise ValueError("all coordinates must be positive")

    def __len__(self):
        return self.configurations.shape[0]

    @property
    def acceptance_ok(self) -> bool:
        lo, hi = self.acceptance_bounds
        return lo <= self.acceptance_rate <= hi

    def merge(self, other: "SampleBatch") -> "SampleBatch":
        """Concatenate two batches of the same ensemble (associative)."""
        if other.params != self.params:
            raise ValueError("cannot merge batches of different ensembles")
        n1, n2 = len(self), len(other)
        rate = (self.acceptance_rate * n1 + other.acceptance_rate * n2) / max(n1 + n2, 1)
        seeds = self.extra.get("merged_seeds", [self.rng_seed]) + other.extra.get("merged_seeds", [other.rng_seed])
        return SampleBatch(
            self.params,
            np.vstack([self.configurations, other.configurations]),
            self.rng_seed,
            rate,
            self.burn_in,
            self.step_sizes,
            self.acceptance_bounds,
            {"merged_seeds": seeds},
        )

    def metadata(self) -> dict:
        return {
            "params": {"m": self.params.m, "n": self.params.n, "alpha": str(self.params.alpha)},
            "seed": self.rng_seed,
            "count": len(self),
            "burn_in": self.burn_in,
            "acceptance_rate": self.acceptance_rate,
            "acceptance_bounds": list(self.acceptance_bounds),
            "step_sizes": list(self.step_sizes),
            **self.extra,
        }

    def to_csv(self, path, *, sidecar: bool = True) -> Path:
        """Write ``x1,...,xm`` rows; a JSON sidecar ``<path>.json`` carries the metadata."""
        path = Path(path)
        with path.open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow([f"x{i + 1}" for i in range(self.params.m)])
            for row in self.configurations:
                w.writerow([repr(float(v)) for v in row])
        if sidecar:
            Path(str(path) + ".json").write_text(json.dumps(self.metadata(), indent=2) + "\n", encoding="utf-8")
        return path


def _log_target_delta(x, i, new, a1):
    """Change of the log density in log-coordinates when x[i] moves to ``new``."""
    old = x[i]
    s = a1 * (math.log(new) - math.log(old)) - (new - old)
    for j, xj in enumerate(x):
        if j != i:
            s += 2 * (math.log(abs(new - xj)) - math.log(abs(old - xj)))
            s -= math.log(new + xj) - math.log(old + xj)
    return s


def mcmc_sample(params: EnsembleParams, total: int, burn_in: int = 10_000, seed: int = 0) -> SampleBatch:
    """Single-site random-walk Metropolis in y = ln x.

    One iteration is a sweep over the m coordinates.  Step sizes adapt during
    burn-in toward the middle of the 25-40% acceptance band and are frozen
    afterwards, so the retained chain is a proper Markov chain.  ``total``
    counts all sweeps; ``total - burn_in`` configurations are returned.
    """
    if not (total > burn_in >= 0):
        raise ValueError("need total > burn_in >= 0")
    m = params.m
    a1 = float(params.a) + 1.0  # x^α times the dx = x dy Jacobian
    rng = np.random.default_rng(seed)
    x = list(rng.gamma(float(params.a) + m, size=m) + 1e-3 * np.arange(1, m + 1))
    steps = [0.8] * m
    target = sum(ACCEPTANCE_BOUNDS) / 2
    keep = total - burn_in
    out = np.empty((keep, m))
    accepted = 0
    block = 100
    block_acc = [0] * m
    for start in range(0, total, 4096):
        n = min(4096, total - start)
        normals = rng.standard_normal((n, m))
        logu = np.log(rng.random((n, m)))
        for t in range(n):
            it = start + t
            for i in range(m):
                new = x[i] * math.exp(steps[i] * normals[t, i])
                if logu[t, i] < _log_target_delta(x, i, new, a1):
                    x[i] = new
                    if it >= burn_in:
                        accepted += 1
                    else:
                        block_acc[i] += 1
            if it < burn_in and (it + 1) % block == 0:
                for i in range(m):
                    rate = block_acc[i] / block
                    steps[i] *= math.exp(rate - target)
                    block_acc[i] = 0
            if it >= burn_in:
                out[it - burn_in] = x
    rate = accepted / (keep * m)
    return SampleBatch(params, out, seed, rate, burn_in, tuple(steps))


# ---------------------------------------------------------------- estimates

@dataclass(frozen=True)
class Estimate:
    """Sample mean with an autocorrelation-corrected standard error."""

    mean: float
    std_error: float
    count: int
    iat: float = 1.0

    @property
    def effective_count(self) -> float:
        return self.count / self.iat

    def within(self, value: float, sigmas: float = 3.0) -> bool:
        return abs(self.mean - value) <= sigmas * self.std_error


def integrated_autocorrelation_time(series, c: float = 5.0) -> float:
    """Integrated autocorrelation time with Sokal's self-consistent window."""
    x = np.asarray(series, dtype=float)
    n = len(x)
    if n < 2:
        return 1.0
    x = x - x.mean()
    var = float(x @ x) / n
    if var == 0:
        return 1.0
    size = 1 << (2 * n - 1).bit_length()
    f = np.fft.rfft(x, size)
    acf = np.fft.irfft(f * np.conj(f), size)[:n] / (var * n)
    tau = 2 * np.cumsum(acf) - 1
    for w in range(1, n):
        if w >= c * tau[w]:
            return max(float(tau[w]), 1.0)
    return max(float(tau[-1]), 1.0)


def _per_sample(batch: SampleBatch, stat: str, k: float):
    x = batch.configurations
    if stat == "R_k":
        return np.sum(x**k, axis=1)
    if stat == "T_k":
        return np.sum(x**k * np.log(x), axis=1)
    lam = x / x.sum(axis=1, keepdims=True)
    if stat == "entropy":
        return -np.sum(lam * np.log(lam), axis=1)
    if stat == "purity":
        return np.sum(lam**2, axis=1)
    if stat == "trace":
        return x.sum(axis=1)
    raise ValueError(f"unknown statistic {stat!r}; choose R_k, T_k, entropy, purity or trace")


def estimate_statistic(batch: SampleBatch, stat: str, k: float = 1.0) -> Estimate:
    """Estimate R_k or T_k (unconstrained x), or entropy / purity (normalized λ = x / Σx).

    Normalized unconstrained samples are samples of the fixed-trace ensemble
    because the trace is independent of λ.
    """
    if len(batch) == 0:
        raise ValueError("empty sample batch")
    vals = _per_sample(batch, stat, k)
    n = len(vals)
    tau = integrated_autocorrelation_time(vals)
    std = float(np.std(vals, ddof=1)) if n > 1 else 0.0
    return Estimate(float(np.mean(vals)), std / math.sqrt(n / tau), n, tau)
