"""Finite-difference bound-state solver for the radial screened Coulomb problem.

The radial equation -(1/2) u'' + U(r) u = E u with u(0) = u(r_max) = 0 is
discretized on a uniform mesh with the 3-point stencil, giving a symmetric
tridiagonal operator

    diag[i] = 1/h^2 + U(r_i),    offdiag = -1/(2 h^2),

whose eigenvalues are extracted by Sturm-sequence bisection and whose
eigenvectors are recovered by shifted inverse iteration.  The off-diagonal is
strictly negative, so eigenvalues are simple and state i has exactly i radial
nodes.

For large C the well sits at r = C and the solver switches to the rescaled
coordinate rho = r/C, where the same stencil applied to

    -(1/2) phi'' + [l(l+1)/(2 rho^2) - C exp(-1/rho)/rho] phi = eps phi

yields eps = C^2 E on an O(1) domain.  Reported energies and eigenvectors are
always converted back to r coordinates.

Eigenvalues are refined by Richardson extrapolation over meshes h and h/2:
E(0) ~ (4 E_{h/2} - E_h)/3, cancelling the leading O(h^2) error.

Everything is deterministic: pure bisection, a fixed all-ones inverse
iteration seed, and a fixed sign convention, so identical inputs give
identical output bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.linalg import solve_banded

from .potentials import RadialProblem, eval_effective, scaled_potential_term

_E = math.e

# States with E above this are finite-box discretizations of the continuum,
# not bound states, and are dropped from the reported spectrum.
BOUND_STATE_CUTOFF = -1e-12

MIN_GRID_POINTS = 16


class UnboundedPotentialError(ValueError):
    """Raised for potential kinds whose spectrum is unbounded below (even K >= 2)."""


class EigenSolverError(RuntimeError):
    """Raised when the eigenvalue machinery cannot converge (e.g. NaN in the operator)."""


@dataclass(frozen=True)
class Grid:
    """Uniform radial mesh of interior nodes r_i = i h, i = 1..n_points.

    The Dirichlet walls sit at r = 0 and r = r_max = (n_points + 1) h, one
    spacing beyond the last stored node; both are enforced implicitly by the
    3-point stencil.  Grids built by :func:`build_grid` always have at least
    MIN_GRID_POINTS nodes; tiny grids remain constructible for unit tests.
    """

    h: float
    n_points: int

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0):
            raise ValueError(f"h must be a positive real, got {self.h!r}")
        if self.n_points < 1:
            raise ValueError(f"n_points must be >= 1, got {self.n_points!r}")

    @property
    def r_first(self) -> float:
        return self.h

    @property
    def r_max(self) -> float:
        return (self.n_points + 1) * self.h

    def nodes(self) -> np.ndarray:
        return self.h * np.arange(1, self.n_points + 1)

    def refined(self) -> "Grid":
        """The h/2 mesh spanning the same domain (2 n + 1 interior nodes)."""
        return Grid(0.5 * self.h, 2 * self.n_points + 1)


@dataclass(frozen=True, eq=False)
class DiscreteOperator:
    """Symmetric tridiagonal discretization of the radial Hamiltonian."""

    diag: np.ndarray
    offdiag: float
    scaled: bool
    grid: Grid

    @property
    def n(self) -> int:
        return self.diag.size


@dataclass(frozen=True, eq=False)
class BoundState:
    energy: float
    nodes: int
    psi: np.ndarray
    converged: bool
    richardson_estimate: float | None = None

    @property
    def best_energy(self) -> float:
        return self.energy if self.richardson_estimate is None else self.richardson_estimate


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ordered bound states (E < 0 only) with solver diagnostics."""

    problem: RadialProblem
    grid: Grid
    states: tuple[BoundState, ...]
    scaled: bool

    def energies(self) -> np.ndarray:
        return np.array([s.energy for s in self.states])

    def best_energies(self) -> np.ndarray:
        return np.array([s.best_energy for s in self.states])


@dataclass(frozen=True)
class SolverConfig:
    k_states: int = 1
    n_points: int = 16000
    eig_tol: float | None = None  # None: 1e-12 * max(1, well depth)
    auto_domain: bool = True
    richardson: bool = True
    scaled_threshold: float = 10.0

    def __post_init__(self):
        if self.k_states < 1:
            raise ValueError("k_states must be >= 1")
        if self.eig_tol is not None and not self.eig_tol > 0:
            raise ValueError("eig_tol must be positive")


def build_grid(problem: RadialProblem, k_states: int, n_points: int, scaled: bool = False) -> Grid:
    """Choose a domain large enough that the k-th target state's tail is negligible.

    Unscaled: r_max = max(40, 10 n_est^2) with the hydrogenic size estimate
    n_est = k_states + l.  Scaled (rho coordinates): the domain covers the
    harmonic well at rho = 1 out to 8 turning points of the highest state,
    and never less than the unscaled hydrogenic span mapped to rho = r/C.
    """
    if n_points < MIN_GRID_POINTS:
        raise ValueError(f"n_points must be >= {MIN_GRID_POINTS}, got {n_points}")
    if k_states < 1:
        raise ValueError("k_states must be >= 1")
    n_est = k_states + problem.l
    span = max(40.0, 10.0 * n_est * n_est)
    if scaled:
        if problem.C <= 0:
            raise ValueError("scaled grids require C > 0")
        x_turn = math.sqrt(2 * k_states + 1) * (_E * problem.C**3) ** 0.25 / problem.C
        span = max(1.0 + 8.0 * x_turn, span / problem.C)
    return Grid(h=span / (n_points + 1), n_points=n_points)


def discretize(problem: RadialProblem, grid: Grid, scaled: bool = False) -> DiscreteOperator:
    """Build the tridiagonal operator for the problem on the given grid.

    With ``scaled=True`` the grid is read in rho = r/C units and the operator's
    eigenvalues are eps = C^2 E.
    """
    if problem.kind.unbounded_below:
        raise UnboundedPotentialError(
            f"potential truncation K={problem.kind.truncation} is unbounded below; "
            "its discrete spectrum would be a grid artifact"
        )
    r = grid.nodes()
    if scaled:
        if problem.C <= 0:
            raise ValueError("scaled discretization requires C > 0")
        if problem.kind.is_truncated:
            raise ValueError("scaled discretization is defined for the full potential only")
        u = problem.l * (problem.l + 1) / (2.0 * r * r) + scaled_potential_term(problem.C, r)
    else:
        u = eval_effective(problem, r)
    h2 = grid.h * grid.h
    return DiscreteOperator(diag=1.0 / h2 + u, offdiag=-0.5 / h2, scaled=scaled, grid=grid)


@njit(cache=True, nogil=True)
def _sturm_count(diag, off_sq, x, pivmin):
    """Number of eigenvalues of the tridiagonal operator strictly below x."""
    count = 0
    q = 1.0
    for i in range(diag.size):
        if i == 0:
            q = diag[0] - x
        else:
            q = diag[i] - x - off_sq / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


@njit(cache=True, nogil=True)
def _bisect_lowest(diag, offdiag, k, tol, max_iter):
    n = diag.size
    off_sq = offdiag * offdiag
    pivmin = 2.2250738585072014e-308 * max(1.0, off_sq)
    rad = 2.0 * abs(offdiag)
    lo0 = diag.min() - rad
    hi0 = diag.max() + rad
    out = np.empty(k)
    prev = lo0
    for j in range(k):
        lo = prev
        hi = hi0
        it = 0
        while hi - lo > tol:
            it += 1
            if it > max_iter:
                return out, False
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:  # float resolution exhausted
                break
            if _sturm_count(diag, off_sq, mid, pivmin) >= j + 1:
                hi = mid
            else:
                lo = mid
        out[j] = 0.5 * (lo + hi)
        prev = lo  # eigenvalue j+1 cannot lie below this
    return out, True


def eigen_lowest(op: DiscreteOperator, k: int, tol: float) -> np.ndarray:
    """The k smallest eigenvalues, each bracketed by Sturm bisection to width <= tol.

    Deterministic: identical inputs give identical output bits.
    """
    if k < 1 or k > op.n:
        raise ValueError(f"k must be in [1, {op.n}], got {k}")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not np.all(np.isfinite(op.diag)) or not math.isfinite(op.offdiag):
        raise EigenSolverError("operator contains non-finite entries")
    vals, ok = _bisect_lowest(op.diag, op.offdiag, k, tol, 300)
    if not ok:
        raise EigenSolverError("bisection bracket failed to shrink")
    return vals


def eigenvector(op: DiscreteOperator, energy: float, tol: float = 1e-12) -> np.ndarray:
    """Eigenvector by shifted inverse iteration, normalized so h * sum(psi^2) = 1.

    Three iterations from a fixed all-ones seed; on a singular solve the shift
    is nudged by `tol` and retried (at most 5 times).  Sign convention: the
    first component above noise level is positive.
    """
    n = op.n
    v = None
    for attempt in range(6):
        shift = energy + attempt * tol
        ab = np.zeros((3, n))
        ab[0, 1:] = op.offdiag
        ab[1, :] = op.diag - shift
        ab[2, :-1] = op.offdiag
        b = np.full(n, 1.0 / math.sqrt(n))
        try:
            for _ in range(3):
                v = solve_banded((1, 1), ab, b)
                norm = np.linalg.norm(v)
                if not np.isfinite(norm) or norm == 0.0:
                    raise np.linalg.LinAlgError("inverse iteration produced a non-finite vector")
                b = v / norm
        except np.linalg.LinAlgError:
            v = None
            continue
        break
    if v is None:
        raise EigenSolverError(f"inverse iteration failed near E = {energy!r}")
    psi = b / math.sqrt(op.grid.h)

    # residual sanity check against the operator scale
    resid = (op.diag - energy) * psi
    resid[:-1] += op.offdiag * psi[1:]
    resid[1:] += op.offdiag * psi[:-1]
    scale = np.abs(op.diag).max() + 2.0 * abs(op.offdiag)
    if np.linalg.norm(resid) > 1e-6 * scale * np.linalg.norm(psi):
        raise EigenSolverError(f"inverse iteration did not converge at E = {energy!r}")

    lead = np.nonzero(np.abs(psi) > 1e-10 * np.abs(psi).max())[0][0]
    if psi[lead] < 0:
        psi = -psi
    return psi


def count_nodes(psi: np.ndarray) -> int:
    """Sign changes of psi, ignoring noise-level components."""
    amp = np.abs(psi).max()
    s = psi[np.abs(psi) > 1e-9 * amp]
    return int(np.count_nonzero(s[:-1] * s[1:] < 0))


def _auto_tol(op: DiscreteOperator, factor: float = 1e-12) -> float:
    """Bisection width target scaled to the well depth (eigenvalue magnitude scale)."""
    h2 = op.grid.h * op.grid.h
    depth = float(np.min(op.diag - 1.0 / h2))
    return factor * max(1.0, abs(depth))


def solve(problem: RadialProblem, config: SolverConfig = SolverConfig(), grid: Grid | None = None) -> Spectrum:
    """Full pipeline: grid -> discretize -> eigenvalues -> eigenvectors -> refine.

    Scaled (rho) coordinates are used when C >= config.scaled_threshold for the
    full potential; eigenvalues are converted back to E = eps/C^2 and
    eigenvectors to the corresponding r grid before reporting.  An explicit
    `grid` overrides the automatic domain (it is read in rho units when the
    scaled path is active).

    Only states with E < BOUND_STATE_CUTOFF are reported; an empty spectrum is
    a valid outcome, not an error.
    """
    if problem.kind.unbounded_below:
        raise UnboundedPotentialError(
            f"potential truncation K={problem.kind.truncation} is unbounded below"
        )
    scaled = (
        not problem.kind.is_truncated
        and problem.C > 0
        and problem.C >= config.scaled_threshold
    )
    if grid is None:
        if not config.auto_domain:
            raise ValueError("auto_domain is disabled and no explicit grid was given")
        grid = build_grid(problem, config.k_states, config.n_points, scaled=scaled)
    op = discretize(problem, grid, scaled=scaled)
    tol = config.eig_tol if config.eig_tol is not None else _auto_tol(op)
    k = config.k_states
    eigs = eigen_lowest(op, k, tol)

    rich = None
    if config.richardson:
        op2 = discretize(problem, grid.refined(), scaled=scaled)
        eigs2 = eigen_lowest(op2, k, tol)
        rich = (4.0 * eigs2 - eigs) / 3.0

    conv_scale = 1e3 * tol
    states = []
    for j in range(k):
        energy = float(eigs[j] / problem.C**2 if scaled else eigs[j])
        if energy >= BOUND_STATE_CUTOFF:
            break  # eigenvalues are increasing: everything above is a box state
        psi = eigenvector(op, eigs[j], tol)
        nodes = count_nodes(psi)
        if scaled:
            psi = psi / math.sqrt(problem.C)
        estimate = None
        converged = True
        if rich is not None:
            correction = abs(rich[j] - eigs[j])
            converged = bool(correction <= conv_scale)
            estimate = float(rich[j] / problem.C**2 if scaled else rich[j])
        states.append(
            BoundState(
                energy=energy,
                nodes=nodes,
                psi=psi,
                converged=converged,
                richardson_estimate=estimate,
            )
        )
    out_grid = Grid(grid.h * problem.C, grid.n_points) if scaled else grid
    return Spectrum(problem=problem, grid=out_grid, states=tuple(states), scaled=scaled)
