# ---
# jupytext:
#   formats: py:light
# ---

# # Strong screening: the harmonic well and the -1/e limit
#
# For large C the minimum of V at r = C dominates and the low s states live
# in an almost harmonic well of depth 1/(e C) and frequency sqrt(1/(e C^3)):
#
#     E_nu ~ -1/(e C) + sqrt(1/(e C^3)) (nu + 1/2)
#
# so C * E_nu -> -1/e from above as C grows.  The solver switches to
# rho = r/C coordinates in this regime (the well then sits at rho = 1 on an
# O(1) domain) and converts eps = C^2 E back afterwards.

import math

from screened_coulomb import RadialProblem, SolverConfig, harmonic_energy, solve

print("ground state: numeric vs harmonic asymptote")
print(f"  {'C':>8} {'E numeric':>15} {'E harmonic':>15} {'C*E':>12}   -1/e = {-1/math.e:.6f}")
for C in (10.0, 100.0, 1e3, 1e4):
    spectrum = solve(RadialProblem(0, C), SolverConfig(k_states=1, n_points=16000))
    e = spectrum.states[0].best_energy
    approx = harmonic_energy(0, C).value
    print(f"  {C:8.0f} {e:15.6e} {approx:15.6e} {C * e:12.6f}")

# ## The vibrational ladder at C = 1e4
#
# Levels are nearly equispaced with spacing sqrt(1/(e C^3)); the asymptote
# degrades slowly with nu.

C = 1e4
spectrum = solve(RadialProblem(0, C), SolverConfig(k_states=3, n_points=16000))
spacing = math.sqrt(1.0 / (math.e * C**3))
print(f"\nladder at C = {C:g} (harmonic spacing {spacing:.4e}):")
for nu, state in enumerate(spectrum.states):
    approx = harmonic_energy(nu, C)
    print(f"  nu={nu}: numeric {state.best_energy:.6e}   harmonic {approx.value:.6e}   "
          f"rel gap {abs(state.best_energy - approx.value) / abs(approx.value):.2e}")

# ## Where the asymptote stops making sense
#
# Below C = e (nu + 1/2)^2 the formula turns positive; it reports itself
# invalid instead of raising, so sweeps can plot the breakdown.

for C in (0.5, 1.0, 2.0, 5.0):
    a = harmonic_energy(0, C)
    print(f"  C = {C:4.1f}: harmonic value {a.value:+.4f}  valid = {a.valid}")
