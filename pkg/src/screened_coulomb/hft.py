"""Hellmann-Feynman checks: eigenvalue derivatives versus expectation values.

For the discrete operator the Hellmann-Feynman identity is exact: the
C-derivative of diag[i] is exactly the weight e^(-C/r_i)/r_i^2 at each node
(or -e^(-1/rho_i)/rho_i in scaled coordinates), so

    dE/dC   = < e^(-C/r) / r^2 >      > 0   (unscaled),
    d(C^2 E)/dC = -< e^(-1/rho)/rho > < 0   (scaled),

hold on the grid up to the finite-difference step error alone.  The checks
therefore solve the same grid at C - dC, C, C + dC (grid reuse is mandatory so
domain jitter cannot contaminate the derivative), form the central difference,
and compare it with the rectangle-rule expectation value over the eigenvector
at C.  The residual must shrink by 4x when dC is halved.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .potentials import RadialProblem
from .solver import (
    Grid,
    SolverConfig,
    build_grid,
    discretize,
    eigen_lowest,
    eigenvector,
)

# Much tighter than the solver default: the finite difference divides the
# eigenvalue bracket width by 2*dC, so the halving protocol needs the
# bisection noise floor well below the O(dC^2) step error.
_TOL_FACTOR = 1e-14

# The identity is exact on any grid, while the eigenvalue noise floor scales
# with the operator norm ~ 1/h^2; a modest grid keeps the floor far below the
# finite-difference signal.
_DEFAULT_CHECK_POINTS = 4000


def _check_config(config: SolverConfig | None) -> SolverConfig:
    return SolverConfig(n_points=_DEFAULT_CHECK_POINTS) if config is None else config


@dataclass(frozen=True)
class HftReport:
    """One Hellmann-Feynman comparison (unscaled or scaled variant).

    The pair of fields for the variant that ran is filled; the other pair is
    None.  ``rel_discrepancy`` always refers to the filled pair.
    """

    dE_dC_expect: float | None
    dE_dC_fd: float | None
    scaled_expect: float | None
    scaled_fd: float | None
    rel_discrepancy: float
    grid_matched: bool


def expectation(psi: np.ndarray, grid: Grid, weight) -> float:
    """Rectangle-rule expectation h * sum(psi_i^2 w(r_i)) over a normalized state.

    The rule matches the discrete normalization h * sum(psi^2) = 1, which is
    what makes the discrete Hellmann-Feynman identity exact.
    """
    norm = grid.h * float(np.dot(psi, psi))
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"state is not normalized on this grid: h*sum(psi^2) = {norm!r}")
    w = np.asarray(weight(grid.nodes()), dtype=float)
    if not np.all(np.isfinite(w)):
        raise ValueError("weight function produced non-finite values on the grid")
    return grid.h * float(np.dot(psi * psi, w))


def _default_delta(C: float) -> float:
    return 1e-4 * max(1.0, C)


def _state_at(problem: RadialProblem, grid: Grid, scaled: bool, index: int,
              tol: float, want_vector: bool):
    op = discretize(problem, grid, scaled=scaled)
    eigs = eigen_lowest(op, index + 1, tol)
    vec = eigenvector(op, eigs[index], tol) if want_vector else None
    return eigs[index], vec


def check_hft_unscaled(problem: RadialProblem, state_index: int = 0,
                       delta_c: float | None = None,
                       config: SolverConfig | None = None) -> HftReport:
    """Compare dE/dC (central difference) with < e^(-C/r)/r^2 >.

    All three solves share one grid; the expectation uses the eigenvector of
    the central solve.  The sign of the expectation is positive for every
    state: the spectrum rises with C.
    """
    config = _check_config(config)
    C = problem.C
    dC = _default_delta(C) if delta_c is None else float(delta_c)
    if not dC > 0:
        raise ValueError("delta_c must be positive")
    if C - dC < 0:
        raise ValueError(f"need C - delta_c >= 0, got C={C}, delta_c={dC}")
    grid = build_grid(problem, state_index + 1, config.n_points, scaled=False)

    op0 = discretize(problem, grid, scaled=False)
    h2 = grid.h * grid.h
    tol = _TOL_FACTOR * max(1.0, abs(float(np.min(op0.diag - 1.0 / h2))))

    e_minus, _ = _state_at(replace(problem, C=C - dC), grid, False, state_index, tol, False)
    e_plus, _ = _state_at(replace(problem, C=C + dC), grid, False, state_index, tol, False)
    e0 = eigen_lowest(op0, state_index + 1, tol)[state_index]
    psi = eigenvector(op0, e0, tol)

    expect = expectation(psi, grid, lambda r: np.exp(-C / r) / (r * r))
    fd = (e_plus - e_minus) / (2.0 * dC)
    rel = abs(fd - expect) / abs(expect)
    return HftReport(
        dE_dC_expect=expect,
        dE_dC_fd=fd,
        scaled_expect=None,
        scaled_fd=None,
        rel_discrepancy=rel,
        grid_matched=True,
    )


def check_hft_scaled(problem: RadialProblem, state_index: int = 0,
                     delta_c: float | None = None,
                     config: SolverConfig | None = None) -> HftReport:
    """Compare d(C^2 E)/dC (central difference of eps) with -< e^(-1/rho)/rho >.

    Runs in rho = r/C coordinates regardless of the solver's scaling
    threshold, on one shared rho grid.  The expectation is negative for every
    state: C^2 E falls with C.
    """
    config = _check_config(config)
    C = problem.C
    if C <= 0:
        raise ValueError("the scaled check requires C > 0")
    dC = _default_delta(C) if delta_c is None else float(delta_c)
    if not dC > 0:
        raise ValueError("delta_c must be positive")
    if C - dC <= 0:
        raise ValueError(f"need C - delta_c > 0, got C={C}, delta_c={dC}")
    grid = build_grid(problem, state_index + 1, config.n_points, scaled=True)

    op0 = discretize(problem, grid, scaled=True)
    h2 = grid.h * grid.h
    tol = _TOL_FACTOR * max(1.0, abs(float(np.min(op0.diag - 1.0 / h2))))

    eps_minus, _ = _state_at(replace(problem, C=C - dC), grid, True, state_index, tol, False)
    eps_plus, _ = _state_at(replace(problem, C=C + dC), grid, True, state_index, tol, False)
    eps0 = eigen_lowest(op0, state_index + 1, tol)[state_index]
    phi = eigenvector(op0, eps0, tol)

    expect = expectation(phi, grid, lambda rho: -np.exp(-1.0 / rho) / rho)
    fd = (eps_plus - eps_minus) / (2.0 * dC)
    rel = abs(fd - expect) / abs(expect)
    return HftReport(
        dE_dC_expect=None,
        dE_dC_fd=None,
        scaled_expect=expect,
        scaled_fd=fd,
        rel_discrepancy=rel,
        grid_matched=True,
    )
