"""The two Hellmann-Feynman identities, checked to near machine sharpness.

Differentiating the Hamiltonian in the screening parameter gives

    dE/dC       = < e^(-C/r) / r^2 >   > 0   (levels rise with C),
    d(C^2 E)/dC = -< e^(-1/rho)/rho >  < 0   (scaled levels fall with C),

and because the same derivative holds exactly for the discretized operator,
comparing a central difference of the eigenvalue with the expectation value
leaves nothing but the O(dC^2) step error.  Halving dC shrinks the residual
by 4x until the eigenvalue noise floor (~ machine epsilon times the operator
norm) takes over.
"""

from screened_coulomb import RadialProblem, check_hft_scaled, check_hft_unscaled

problem = RadialProblem(0, 0.1)

print("unscaled identity at l=0, C=0.1 (ground state):")
report = check_hft_unscaled(problem, 0, 1e-4)
print(f"  expectation        {report.dE_dC_expect:+.10f}")
print(f"  finite difference  {report.dE_dC_fd:+.10f}")
print(f"  rel discrepancy    {report.rel_discrepancy:.2e}")

print("\nscaled identity at the same point:")
report = check_hft_scaled(problem, 0, 1e-4)
print(f"  expectation        {report.scaled_expect:+.10f}")
print(f"  finite difference  {report.scaled_fd:+.10f}")
print(f"  rel discrepancy    {report.rel_discrepancy:.2e}")

print("\nquadratic shrink of the residual with the step (unscaled):")
print(f"  {'dC':>8} {'rel discrepancy':>16}")
previous = None
for delta in (4e-3, 2e-3, 1e-3, 5e-4):
    rel = check_hft_unscaled(problem, 0, delta).rel_discrepancy
    note = f"   ratio {previous / rel:4.2f}" if previous else ""
    print(f"  {delta:8.0e} {rel:16.3e}{note}")
    previous = rel
