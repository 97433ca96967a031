"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import math
import time

import numpy as np

from screened_coulomb import (
    DiscreteOperator,
    Grid,
    RadialProblem,
    SolverConfig,
    build_grid,
    check_hft_scaled,
    check_hft_unscaled,
    cli,
    eigen_lowest,
    scaled_energy,
    shoot_eigenvalue,
    solve,
)

from _oracles import jacobi_eigenvalues, tridiagonal_dense

E_INV = 1.0 / math.e


def _report(num, description, ok, elapsed):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num}: {status} ({elapsed:.2f}s) - {description}")
    assert ok, f"criterion {num} failed: {description}"


def test_criterion_1_k1_table_reproduction(capsys):
    t0 = time.perf_counter()
    code = cli.main(["table1", "--check"])
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(1, "table1 --check reproduces all 40 printed values",
                code == 0 and elapsed < 1.0, elapsed)


def test_criterion_2_harmonic_table_reproduction(capsys):
    t0 = time.perf_counter()
    code = cli.main(["table2", "--check"])
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(2, "table2 --check reproduces all 12 printed values",
                code == 0 and elapsed < 1.0, elapsed)


def test_criterion_3_hydrogen_limit(capsys):
    t0 = time.perf_counter()
    worst = 0.0
    for l in range(3):
        spectrum = solve(RadialProblem(l, 0.0), SolverConfig(k_states=3 - l, n_points=16000))
        for i, state in enumerate(spectrum.states):
            n = l + 1 + i
            worst = max(worst, abs(state.best_energy + 0.5 / n**2))
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(3, f"hydrogen levels n<=3, l<=2 within 1e-6 (worst {worst:.1e})",
                worst <= 1e-6 and elapsed < 60.0, elapsed)


def test_criterion_4_oracle_equivalence(capsys):
    t0 = time.perf_counter()
    worst = 0.0
    for l in (0, 1, 7):
        for C in (0.01, 0.1, 1.0):
            problem = RadialProblem(l, C)
            e_matrix = solve(problem, SolverConfig(k_states=1, n_points=16000)).states[0].best_energy
            grid = build_grid(problem, 1, 32000)
            width = max(0.02 * abs(e_matrix), 1e-5)
            e_shoot = shoot_eigenvalue(problem, grid, 0,
                                       (e_matrix - width, e_matrix + width))
            worst = max(worst, abs(e_matrix - e_shoot))
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(4, f"matrix vs Numerov on 9-case grid within 1e-6 (worst {worst:.1e})",
                worst <= 1e-6 and elapsed < 120.0, elapsed)


def test_criterion_5_hft_structural(capsys):
    t0 = time.perf_counter()
    ok = True
    details = []
    for l, C in ((0, 0.1), (1, 0.5)):
        problem = RadialProblem(l, C)
        for check in (check_hft_unscaled, check_hft_scaled):
            rel = check(problem, 0, 1e-4).rel_discrepancy
            ok &= rel < 1e-5
            # quadratic-step verification runs where the O(dC^2) term clears
            # the eigenvalue noise floor (see notes); same 4x +/- 20% window
            ratio = (check(problem, 0, 2e-3).rel_discrepancy
                     / check(problem, 0, 1e-3).rel_discrepancy)
            ok &= 3.2 <= ratio <= 4.8
            details.append(f"{check.__name__[10:]}(l={l},C={C}): rel={rel:.1e} ratio={ratio:.2f}")
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(5, "HFT identities sharp at dC=1e-4 and quadratic in the step; "
                   + "; ".join(details), ok, elapsed)


def test_criterion_6_monotonicity_sweeps(capsys):
    t0 = time.perf_counter()
    rising = []
    for C in [0.02 * i for i in range(11)]:
        spectrum = solve(RadialProblem(0, C), SolverConfig(k_states=1, n_points=16000))
        rising.append(spectrum.states[0].best_energy)
    ok = all(b > a for a, b in zip(rising, rising[1:]))

    falling = []
    for C in (0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0):
        spectrum = solve(RadialProblem(0, C), SolverConfig(k_states=1, n_points=16000))
        falling.append(scaled_energy(spectrum.states[0].best_energy, C)[0])
    ok &= all(b < a for a, b in zip(falling, falling[1:]))

    # vanishing trend: C^2 E collapses four orders below its C = 1 magnitude scale
    tiny = solve(RadialProblem(0, 0.01), SolverConfig(k_states=1, n_points=16000))
    c2e_small = scaled_energy(tiny.states[0].best_energy, 0.01)[0]
    ok &= abs(c2e_small) < 1e-4 * max(1.0, abs(falling[3]))
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(6, f"E(C) rising, C^2 E falling, |C^2 E|(0.01) = {abs(c2e_small):.1e}",
                ok, elapsed)


def test_criterion_7_large_screening_asymptote(capsys):
    t0 = time.perf_counter()
    spectrum = solve(RadialProblem(0, 1e4), SolverConfig(k_states=1, n_points=16000))
    energy = spectrum.states[0].best_energy
    ce = 1e4 * energy
    ce_gap = abs(ce + E_INV) / E_INV
    harmonic_gap = abs(energy - (-3.6485e-5)) / 3.6485e-5
    ok = spectrum.scaled and ce_gap < 0.01 and harmonic_gap < 0.005
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(7, f"C E at C=1e4 within 1% of -1/e (off {ce_gap:.2%}), "
                   f"within 0.5% of harmonic value (off {harmonic_gap:.2%})",
                ok and elapsed < 30.0, elapsed)


def test_criterion_8_bound_state_persistence(capsys):
    t0 = time.perf_counter()
    ok = True
    for C in (1e-2, 1e-1, 1.0, 10.0, 1e2, 1e3, 1e4):
        spectrum = solve(RadialProblem(0, C), SolverConfig(k_states=1, n_points=16000))
        ok &= len(spectrum.states) == 1 and spectrum.states[0].energy < 0
    high_l = solve(RadialProblem(7, 0.1), SolverConfig(k_states=1, n_points=16000))
    ok &= len(high_l.states) == 1 and high_l.states[0].energy < 0
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(8, "ground state bound at every C in {1e-2..1e4} and for l=7, C=0.1",
                ok, elapsed)


def test_criterion_9_tridiagonal_eigensolver_oracle(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(20240831)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 65))
        diag = rng.uniform(-2.0, 2.0, n)
        off = -float(rng.uniform(0.05, 2.0))
        op = DiscreteOperator(diag=diag, offdiag=off, scaled=False, grid=Grid(1.0, n))
        mine = eigen_lowest(op, n, 1e-13)
        ref = jacobi_eigenvalues(tridiagonal_dense(diag, off))
        worst = max(worst, float(np.max(np.abs(mine - ref))))
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _report(9, f"100 random tridiagonals vs Jacobi oracle within 1e-10 (worst {worst:.1e})",
                worst <= 1e-10 and elapsed < 10.0, elapsed)
