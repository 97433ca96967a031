"""Closed-form eigenvalue approximations for the screened Coulomb spectrum.

Three formulas are provided:

* the pure Coulomb baseline  E_n = -1/(2 n^2)  (C = 0 limit),
* the exactly solvable K=1 truncation, where the C/r^2 term only shifts the
  effective angular momentum,
* the large-C harmonic asymptote for s states, from expanding the potential
  about its minimum at r = C.

Quantum-number conventions: n >= l+1 is the principal quantum number and
nu = n - l - 1 counts radial nodes.  The harmonic ladder is indexed by
nu = n - 1 (it only exists for l = 0).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

_E = math.e


class Formula(str, enum.Enum):
    COULOMB_EXACT = "coulomb-exact"
    K1_EXACT = "k1-exact"
    HARMONIC_ASYMPTOTE = "harmonic-asymptote"


@dataclass(frozen=True)
class ApproxEigenvalue:
    """Energy produced by a closed-form formula, tagged with its origin.

    ``valid`` is False when the value falls outside the formula's validity
    regime (only the harmonic asymptote can go invalid: its value turns
    non-negative once C drops below e*(nu + 1/2)^2).
    """

    value: float
    formula: Formula
    n: int
    l: int
    nu: int
    valid: bool = True


def nu_from_nl(n: int, l: int) -> int:
    """Radial node count nu = n - l - 1."""
    _check_nl(n, l)
    return n - l - 1


def n_from_nu(nu: int, l: int = 0) -> int:
    """Principal quantum number n = nu + l + 1."""
    if nu < 0 or l < 0:
        raise ValueError("nu and l must be non-negative")
    return nu + l + 1


def _check_nl(n: int, l: int):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    if n <= l:
        raise ValueError(f"need n >= l + 1, got n={n}, l={l}")


def coulomb_energy(n: int) -> float:
    """Hydrogenic level -1/(2 n^2)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return -0.5 / (n * n)


def effective_angular_momentum(l: int, C: float) -> float:
    """Solution L of L(L+1) = l(l+1) + 2C, i.e. L = -1/2 + sqrt((l+1/2)^2 + 2C).

    The K=1 truncation adds C/r^2 to the potential, which is absorbed into the
    centrifugal term by replacing l with this (generally non-integer) L.
    """
    if l < 0:
        raise ValueError("l must be >= 0")
    if C < 0:
        raise ValueError("C must be >= 0")
    return -0.5 + math.sqrt((l + 0.5) ** 2 + 2.0 * C)


def k1_energy(n: int, l: int, C: float) -> ApproxEigenvalue:
    """Exact eigenvalue of the K=1 truncated problem:

    E = -1/(2 (n + L - l)^2) with L = effective_angular_momentum(l, C).

    Reduces to the Coulomb level at C = 0.
    """
    _check_nl(n, l)
    if C < 0:
        raise ValueError("C must be >= 0")
    L = effective_angular_momentum(l, C)
    value = -0.5 / (n + L - l) ** 2
    return ApproxEigenvalue(value, Formula.K1_EXACT, n=n, l=l, nu=n - l - 1)


def harmonic_energy(nu: int, C: float) -> ApproxEigenvalue:
    """Large-C harmonic-well asymptote for s states:

    E_nu ~ -1/(e C) + sqrt(1/(e C^3)) (nu + 1/2),  nu = n - 1.

    Instead of rejecting small C the result carries valid=False once the
    value is non-negative, so sweeps can show the approximation breaking down.
    """
    if nu < 0:
        raise ValueError("nu must be >= 0")
    if not (math.isfinite(C) and C > 0):
        raise ValueError("C must be a positive real")
    value = -1.0 / (_E * C) + math.sqrt(1.0 / (_E * C**3)) * (nu + 0.5)
    return ApproxEigenvalue(
        value, Formula.HARMONIC_ASYMPTOTE, n=nu + 1, l=0, nu=nu, valid=value < 0.0
    )


def scaled_energy(E: float, C: float) -> tuple[float, float]:
    """The pair (C^2 E, C E) used by the scaling/monotonicity checks.

    C^2 E is the eigenvalue of the rho = r/C rescaled equation and decreases
    with C; C E tends to -1/e for the ground state as C grows.
    """
    if C < 0:
        raise ValueError("C must be >= 0")
    return (C * C * E + 0.0, C * E + 0.0)  # + 0.0 normalises -0.0 at C = 0
