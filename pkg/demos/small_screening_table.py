"""Closed-form eigenvalues at weak screening versus the numeric solver.

The K=1 truncation turns the C/r^2 correction into a shift of the effective
angular momentum and is exactly solvable: E = -1/(2 (n + L - l)^2) with
L = -1/2 + sqrt((l + 1/2)^2 + 2C).  At C = 0.1 this reproduces the standard
reference grid of 40 levels to 3 significant figures; the numeric spectrum of
the full potential sits close by (the truncation underbinds by a few percent
for the lowest states).
"""

from screened_coulomb import RadialProblem, SolverConfig, k1_energy, solve
from screened_coulomb.reference_tables import K1_TABLE, K1_TABLE_C, format_sig, sig_figs

print(f"K=1 closed form at C = {K1_TABLE_C} (3 significant figures):\n")
print("  nu      l=0        l=1        l=2        l=3")
for nu, ref_row in enumerate(K1_TABLE):
    cells = []
    for l in range(4):
        value = k1_energy(nu + l + 1, l, K1_TABLE_C).value
        cells.append(format_sig(value, sig_figs(ref_row[l])))
    print(f"  {nu:2d}  " + "  ".join(f"{c:>9}" for c in cells))

print("\nFull-potential numeric energies for the lowest s states (n_points = 8000):")
spectrum = solve(RadialProblem(0, K1_TABLE_C), SolverConfig(k_states=3, n_points=8000))
for i, state in enumerate(spectrum.states):
    n = i + 1
    approx = k1_energy(n, 0, K1_TABLE_C).value
    print(f"  n={n}: numeric {state.best_energy:+.6f}   K=1 formula {approx:+.6f}   "
          f"gap {state.best_energy - approx:+.2e}")

print("\nThe l = 7 case at C = 0.1 (once argued to have lost its bound states):")
spectrum7 = solve(RadialProblem(7, K1_TABLE_C), SolverConfig(k_states=1, n_points=16000))
state = spectrum7.states[0]
print(f"  ground state E = {state.best_energy:+.8f}  (bound: {state.energy < 0}), "
      f"K=1 formula {k1_energy(8, 7, K1_TABLE_C).value:+.8f}")
