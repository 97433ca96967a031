"""Second-order convergence of the discretization, and what Richardson buys.

The 3-point stencil carries an O(h^2) eigenvalue error; solving at h and h/2
and extrapolating (4 E_{h/2} - E_h)/3 cancels it.  Hydrogen (C = 0) makes the
bookkeeping transparent because E_n = -1/(2 n^2) exactly.
"""

from screened_coulomb import Grid, RadialProblem, discretize, eigen_lowest

problem = RadialProblem(0, 0.0)
r_max = 40.0
exact = -0.5

print("hydrogen 1s on successively refined grids:")
print(f"  {'n_points':>9} {'h':>10} {'E_h':>16} {'error':>11}")
grids = [Grid(r_max / (n + 1), n) for n in (1000, 2000, 4000, 8000, 16000)]
energies = []
for grid in grids:
    e = eigen_lowest(discretize(problem, grid), 1, 1e-13)[0]
    energies.append(e)
    print(f"  {grid.n_points:9d} {grid.h:10.5f} {e:16.10f} {e - exact:11.2e}")

print("\nconsecutive error ratios (4x per halving confirms second order):")
for a, b in zip(energies, energies[1:]):
    print(f"  {(a - exact) / (b - exact):6.3f}")

print("\nRichardson pairs (4 E_h/2 - E_h)/3:")
for coarse, grid in zip(energies, grids):
    fine = eigen_lowest(discretize(problem, grid.refined()), 1, 1e-13)[0]
    extrapolated = (4 * fine - coarse) / 3
    print(f"  from n = {grid.n_points:6d}: E(0) = {extrapolated:.12f}  "
          f"error {extrapolated - exact:+.1e}")
