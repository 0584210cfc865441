"""Test-mode coefficient perturbation, used as a negative control for the
identity checks."""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

_ACTIVE: dict[str, Fraction] = {}

PERTURBABLE = ("g1", "g2", "g3", "b1", "b2", "c1", "c2", "a1", "a2", "a3", "a4", "a5")


@contextmanager
def perturbed(name: str, rel=Fraction(1, 1000)):
    """Scale coefficient ``name`` by (1 + rel) inside the block."""
    if name not in PERTURBABLE:
        raise ValueError(f"unknown coefficient {name!r}; choose from {', '.join(PERTURBABLE)}")
    old = _ACTIVE.get(name)
    _ACTIVE[name] = Fraction(rel)
    try:
        yield
    finally:
        if old is None:
            _ACTIVE.pop(name, None)
        else:
            _ACTIVE[name] = old


def scale(name: str, value):
    rel = _ACTIVE.get(name)
    return value if rel is None else value * (1 + rel)


def state() -> tuple:
    """Hashable snapshot of the active perturbations, for cache keys."""
    return tuple(sorted(_ACTIVE.items()))
