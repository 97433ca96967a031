"""Numerov shooting eigenvalue solver, used as an independent oracle.

This is a deliberately separate code path from the matrix solver: the radial
equation u'' = 2(U(r) - E) u is integrated with the fourth-order Numerov
scheme outward from the origin (u ~ r^(l+1), realised by the u(0) = 0 start)
and inward from r_max (u ~ exp(-sqrt(-2E) r)), and the two branches are
matched at the outermost classical turning point.  The eigenvalue is located
by bisection: first on outward node counts until the bracket contains exactly
the target state, then on the sign of the log-derivative mismatch at the
matching point, down to a bracket width of 1e-10.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .potentials import RadialProblem, eval_effective
from .solver import Grid

BRACKET_WIDTH = 1e-10

_RESCALE = 1e250


class BracketError(ValueError):
    """The energy bracket does not straddle the requested eigenvalue."""


class EigenMatchError(RuntimeError):
    """No finite derivative mismatch could be formed near the matching point."""


@njit(cache=True, nogil=True)
def _outward(u2, h, E, stop, g0, i0, start_ratio):
    """Integrate outward over nodes i0..stop; return (nodes, u[stop-2..stop]).

    For l <= 1 the sweep starts at the first node (i0 = 1), feeding the origin
    limit `g0` of f(r) u(r) into the first step so the scheme stays fourth
    order against a -1/r or centrifugal singularity.  For higher l the first
    nodes violate the Numerov stability condition (h^2 f/12 = l(l+1)/12 > 1
    near r = h no matter how small h is), so the sweep starts at node i0 with
    the series pair u ~ r^(l+1): u[i0-1] = start_ratio, u[i0] = 1.

    Node counting uses the sign of every computed value; the solution is
    rescaled when it grows past the overflow guard, except within the last
    step so the returned window keeps consistent ratios.
    """
    h12 = h * h / 12.0
    nodes = 0
    if i0 <= 1:
        i_start = 1
        u_prev = 1.0  # scale-free: u(0)=0 makes the start amplitude arbitrary
        c_prev = 1.0 - h12 * (u2[0] - 2.0 * E)
        c_cur = 1.0 - h12 * (u2[1] - 2.0 * E)
        u_cur = ((12.0 - 10.0 * c_prev) * u_prev + h12 * g0) / c_cur
        if u_cur < 0.0:
            nodes += 1
    else:
        i_start = i0
        u_prev = start_ratio
        c_prev = 1.0 - h12 * (u2[i0 - 1] - 2.0 * E)
        c_cur = 1.0 - h12 * (u2[i0] - 2.0 * E)
        u_cur = 1.0
    last_sign = 1.0 if u_cur >= 0.0 else -1.0
    w0 = u_prev
    w1 = u_cur
    w2 = u_cur
    for i in range(i_start, stop):
        c_next = 1.0 - h12 * (u2[i + 1] - 2.0 * E)
        u_next = ((12.0 - 10.0 * c_cur) * u_cur - c_prev * u_prev) / c_next
        if u_next != 0.0:
            s = 1.0 if u_next > 0.0 else -1.0
            if s * last_sign < 0.0:
                nodes += 1
            last_sign = s
        if abs(u_next) > _RESCALE and i < stop - 1:
            # the recurrence is linear: dividing the rolling pair rescales the
            # whole subsequent solution uniformly, so the capture window at
            # stop-1 keeps consistent ratios
            u_cur /= abs(u_next)
            u_next = math.copysign(1.0, u_next)
        if i == stop - 1:
            w0, w1, w2 = u_prev, u_cur, u_next  # u[stop-2], u[stop-1], u[stop]
        u_prev, u_cur = u_cur, u_next
        c_prev, c_cur = c_cur, c_next
    return nodes, w0, w1, w2


@njit(cache=True, nogil=True)
def _inward(u2, h, E, kappa, m):
    """Integrate inward from the outer wall down to node m-1; return u[m-1..m+1]."""
    n = u2.size
    h12 = h * h / 12.0
    u_outer = 1.0
    u_cur = math.exp(kappa * h)  # exp(-kappa r) start, normalised at the wall
    c_outer = 1.0 - h12 * (u2[n - 1] - 2.0 * E)
    c_cur = 1.0 - h12 * (u2[n - 2] - 2.0 * E)
    v0 = u_cur
    v1 = u_cur
    v2 = u_outer
    for i in range(n - 2, m - 1, -1):
        c_inner = 1.0 - h12 * (u2[i - 1] - 2.0 * E)
        u_inner = ((12.0 - 10.0 * c_cur) * u_cur - c_outer * u_outer) / c_inner
        if abs(u_inner) > _RESCALE and i - 1 > m + 2:
            u_cur /= abs(u_inner)
            u_inner = math.copysign(1.0, u_inner)
        u_outer, u_cur = u_cur, u_inner
        c_outer, c_cur = c_cur, c_inner
        if i - 1 == m + 1:
            v2 = u_cur
        elif i - 1 == m:
            v1 = u_cur
        elif i - 1 == m - 1:
            v0 = u_cur
    return v0, v1, v2


def _origin_limit(problem: RadialProblem, h: float) -> float:
    """lim r->0 of f(r) u(r), per unit u(h), for the u ~ r^(l+1) start.

    Only two pieces survive: the l = 1 centrifugal term, and for l = 0 the
    -1/r Coulomb tail of the unscreened potential (the screened exponential
    kills it for any C > 0).
    """
    if problem.l == 1:
        return 2.0 / (h * h)
    if problem.l == 0 and problem.C == 0.0:
        return -2.0 / h
    return 0.0


def _start_index(l: int) -> int:
    """First node where the Numerov step is stable against the centrifugal term."""
    if l <= 1:
        return 1
    return math.ceil(math.sqrt(l * (l + 1) / 6.0)) + 2


def _start_ratio(l: int, i0: int) -> float:
    # series pair u ~ r^(l+1) at nodes i0-1 and i0 (r = (i+1) h, 0-based)
    return (i0 / (i0 + 1.0)) ** (l + 1) if i0 > 1 else 1.0


def _node_count(u2, h, E, g0, i0, ratio):
    nodes, _, _, _ = _outward(u2, h, E, u2.size - 1, g0, i0, ratio)
    return nodes


def _matching_index(U, E, n, lo_clip):
    """Outermost classical turning point, clipped for the matching stencil."""
    allowed = np.nonzero(U <= E)[0]
    m = int(allowed[-1]) if allowed.size else int(np.argmin(U))
    return min(max(m, lo_clip), n - 4)


def _mismatch(u2, h, U, E, n, g0, i0, ratio):
    """Log-derivative mismatch of outward and inward branches at the turning point."""
    lo_clip = i0 + 2
    m = _matching_index(U, E, n, lo_clip)
    if m < lo_clip:
        raise EigenMatchError("classically allowed region too close to the origin")
    for _ in range(5):
        _, o0, o1, o2 = _outward(u2, h, E, m + 1, g0, i0, ratio)
        v0, v1, v2 = _inward(u2, h, E, math.sqrt(max(-2.0 * E, 1e-300)), m)
        if o1 != 0.0 and v1 != 0.0:
            d_out = (o2 - o0) / (2.0 * h * o1)
            d_in = (v2 - v0) / (2.0 * h * v1)
            w = d_out - d_in
            if math.isfinite(w):
                return w
        m = max(m - 1, lo_clip)  # node at the matching point: shift and retry
    raise EigenMatchError(f"could not form a finite mismatch at E = {E!r}")


def shoot_eigenvalue(problem: RadialProblem, grid: Grid, nodes_target: int,
                     bracket: tuple[float, float]) -> float:
    """Locate the eigenvalue with `nodes_target` radial nodes inside `bracket`.

    The bracket must straddle the target state: the outward node count at the
    lower end may not exceed nodes_target and the count at the upper end must
    exceed it.  Extra eigenvalues inside the bracket are allowed; node-count
    bisection isolates the target before the sign of the derivative mismatch
    takes over.
    """
    if problem.kind.is_truncated:
        raise ValueError("shooting supports the full screened potential only")
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise BracketError(f"invalid bracket ({lo}, {hi})")
    U = eval_effective(problem, grid.nodes())
    u2 = 2.0 * U
    n = grid.n_points
    g0 = _origin_limit(problem, grid.h)
    i0 = _start_index(problem.l)
    ratio = _start_ratio(problem.l, i0)
    if n < i0 + 8:
        raise ValueError(f"grid too small for l={problem.l}: need over {i0 + 8} points")

    c_lo = _node_count(u2, grid.h, lo, g0, i0, ratio)
    c_hi = _node_count(u2, grid.h, hi, g0, i0, ratio)
    if c_lo > nodes_target or c_hi < nodes_target + 1:
        raise BracketError(
            f"bracket ({lo}, {hi}) has node counts ({c_lo}, {c_hi}); "
            f"it does not straddle the state with {nodes_target} nodes"
        )

    # isolate the target eigenvalue by integer node counts
    while not (c_lo == nodes_target and c_hi == nodes_target + 1):
        if hi - lo <= BRACKET_WIDTH:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        c_mid = _node_count(u2, grid.h, mid, g0, i0, ratio)
        if c_mid >= nodes_target + 1:
            hi, c_hi = mid, c_mid
        else:
            lo, c_lo = mid, c_mid

    # refine on the derivative mismatch; fall back to node counts if the
    # mismatch does not change sign across the bracket
    w_lo = _mismatch(u2, grid.h, U, lo, n, g0, i0, ratio)
    w_hi = _mismatch(u2, grid.h, U, hi, n, g0, i0, ratio)
    use_mismatch = math.isfinite(w_lo) and math.isfinite(w_hi) and w_lo * w_hi < 0.0
    while hi - lo > BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if use_mismatch:
            w_mid = _mismatch(u2, grid.h, U, mid, n, g0, i0, ratio)
            if w_mid == 0.0:
                return mid
            if (w_mid > 0.0) == (w_lo > 0.0):
                lo, w_lo = mid, w_mid
            else:
                hi, w_hi = mid, w_mid
        else:
            if _node_count(u2, grid.h, mid, g0, i0, ratio) >= nodes_target + 1:
                hi = mid
            else:
                lo = mid
    return 0.5 * (lo + hi)
