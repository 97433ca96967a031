"""Screened Coulomb potential, its Taylor truncations, and the effective radial potential.

The potential family is V(r) = -exp(-C/r)/r with screening parameter C >= 0,
together with its small-C/r Taylor truncations

    V_K(r) = -(1/r) * sum_{j=0..K} (-C/r)^j / j!

Everything is expressed in Hartree atomic units (hbar = m = e = 1), so the
radial equation carries a 1/2 kinetic prefactor and energies come out in
Hartree.  All evaluation functions accept scalars or numpy arrays for `r`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# exp(-x) for x beyond this is below the double-precision range; we return an
# exact 0 instead so r -> 0 never produces 0*inf = NaN.
EXP_UNDERFLOW = 700.0

_E = math.e


@dataclass(frozen=True)
class PotentialKind:
    """Potential selector.

    ``truncation=None`` means the full screened Coulomb potential; an integer
    K >= 0 selects the K-term Taylor truncation V_K.  Even truncations with
    K >= 2 behave like -C^K/(K! r^(K+1)) near the origin and are therefore
    unbounded below; they stay constructible (so they can be plotted and
    inspected) but the solver refuses them.
    """

    truncation: int | None = None

    def __post_init__(self):
        k = self.truncation
        if k is not None and (not isinstance(k, (int, np.integer)) or k < 0):
            raise ValueError(f"truncation must be None or a non-negative integer, got {k!r}")

    @classmethod
    def screened(cls) -> "PotentialKind":
        return cls(None)

    @classmethod
    def truncated(cls, k: int) -> "PotentialKind":
        return cls(k)

    @property
    def is_truncated(self) -> bool:
        return self.truncation is not None

    @property
    def unbounded_below(self) -> bool:
        k = self.truncation
        return k is not None and k >= 2 and k % 2 == 0


SCREENED = PotentialKind()


@dataclass(frozen=True)
class RadialProblem:
    """Radial bound-state problem: angular momentum l, screening C, potential kind."""

    l: int
    C: float
    kind: PotentialKind = SCREENED

    def __post_init__(self):
        if not isinstance(self.l, (int, np.integer)) or self.l < 0:
            raise ValueError(f"l must be a non-negative integer, got {self.l!r}")
        if not (math.isfinite(self.C) and self.C >= 0):
            raise ValueError(f"C must be a finite non-negative real, got {self.C!r}")


@dataclass(frozen=True)
class HarmonicExpansion:
    """Quadratic expansion of the full potential about its minimum at r = C."""

    r_min: float
    v_min: float
    curvature: float


def _as_positive_r(r):
    arr = np.asarray(r, dtype=float)
    if arr.size and np.any(arr <= 0):
        raise ValueError("r must be strictly positive")
    return arr


def _screened_values(C: float, r: np.ndarray) -> np.ndarray:
    # x may overflow to inf for denormal r; the where() branch makes that 0.
    with np.errstate(over="ignore", divide="ignore"):
        x = C / r
        safe = np.minimum(x, EXP_UNDERFLOW)
        out = np.where(x > EXP_UNDERFLOW, 0.0, -np.exp(-safe) / r)
    return out


def _truncated_values(K: int, C: float, r: np.ndarray) -> np.ndarray:
    # Horner form of sum_{j=0..K} (-x)^j / j!; free of inf-inf cancellation,
    # and the overflow to +/-inf at tiny r is the correct divergent limit.
    with np.errstate(over="ignore"):
        x = C / r
        s = np.ones_like(x)
        for j in range(K, 0, -1):
            s = 1.0 - (x / j) * s
        return -s / r


def eval_potential(kind: PotentialKind, C: float, r):
    """Evaluate the selected potential at radius r (> 0).

    For the full potential the value underflows smoothly to exactly 0 as
    r -> 0+ (the exponential wins); truncations diverge at the origin with
    the sign of their leading term.
    """
    if C < 0:
        raise ValueError("C must be non-negative")
    arr = _as_positive_r(r)
    if kind.is_truncated:
        out = _truncated_values(kind.truncation, C, arr)
    else:
        out = _screened_values(C, arr)
    return float(out) if arr.ndim == 0 else out


def scaled_potential_term(C: float, rho):
    """-C exp(-1/rho)/rho: the potential term of the rho = r/C rescaled equation."""
    arr = _as_positive_r(rho)
    out = C * C * _screened_values(C, C * arr)
    return float(out) if arr.ndim == 0 else out


def eval_effective(problem: RadialProblem, r):
    """Effective radial potential U(r) = l(l+1)/(2 r^2) + V(r)."""
    arr = _as_positive_r(r)
    cent = problem.l * (problem.l + 1) / (2.0 * arr * arr)
    out = cent + eval_potential(problem.kind, problem.C, arr)
    return float(out) if arr.ndim == 0 else out


def tail_product(problem: RadialProblem, r):
    """r * U(r) for the full potential; tends to -1 as r grows, for every l and C.

    This is the quantity showing that the effective potential keeps an
    attractive -1/r tail no matter how large l or C are.
    """
    if problem.kind.is_truncated:
        raise ValueError("tail_product is defined for the full screened potential only")
    arr = _as_positive_r(r)
    out = arr * eval_effective(problem, arr)
    return float(out) if arr.ndim == 0 else out


def harmonic_expansion(C: float) -> HarmonicExpansion:
    """Expansion data of the full potential about its minimum:

    r_min = C, V(r_min) = -1/(e C), V''(r_min) = 1/(e C^3).
    """
    if not (math.isfinite(C) and C > 0):
        raise ValueError("C must be a positive real")
    return HarmonicExpansion(r_min=C, v_min=-1.0 / (_E * C), curvature=1.0 / (_E * C**3))
