# ---
# jupytext:
#   formats: py:light
# ---

# # The screened Coulomb potential and its long-range tail
#
# The potential V(r) = -exp(-C/r)/r looks repulsive-ish at small r (the
# exponential switches the attraction off inside r ~ C), which once led to
# speculation that large screening or large angular momentum could push all
# levels into the continuum.  The numbers below show why that cannot happen:
# no matter how large l and C are, r * U(r) -> -1, i.e. the effective
# potential always keeps an attractive Coulomb tail.

import numpy as np

from screened_coulomb import (
    SCREENED,
    PotentialKind,
    RadialProblem,
    eval_potential,
    harmonic_expansion,
    tail_product,
)

# ## Tail product r * U(r) for the "worst" case l = 7, C = 0.1

problem = RadialProblem(7, 0.1)
print("r * U(r) for l=7, C=0.1 (should drift to -1):")
for r in (1e1, 1e2, 1e3, 1e4, 1e5, 1e6):
    print(f"  r = {r:8.0f}:  {tail_product(problem, r):+.8f}")

# ## The minimum of the well
#
# V has a single minimum at r = C of depth -1/(e C); for large C the well
# becomes wide and shallow, with curvature 1/(e C^3).

for C in (0.5, 1.0, 10.0, 100.0):
    exp = harmonic_expansion(C)
    print(f"C = {C:6.1f}: r_min = {exp.r_min:6.1f}, v_min = {exp.v_min:+.3e}, "
          f"curvature = {exp.curvature:.3e}")

# ## Taylor truncations
#
# The truncations V_K reproduce the full potential for r >> C but their
# small-r behaviour alternates: odd K gives a repulsive core (fine), even
# K >= 2 diverges to -infinity (the solver refuses those).

r = np.array([0.05, 0.2, 1.0, 5.0])
print("\nV_K(r) at C = 0.1 versus the full potential:")
print(f"  {'r':>6} {'full':>12} {'K=0':>12} {'K=1':>12} {'K=2':>12} {'K=3':>12}")
for i, ri in enumerate(r):
    row = [eval_potential(SCREENED, 0.1, ri)]
    row += [eval_potential(PotentialKind.truncated(k), 0.1, ri) for k in range(4)]
    print(f"  {ri:6.2f} " + " ".join(f"{v:+12.5f}" for v in row))

for k in range(5):
    kind = PotentialKind.truncated(k)
    tag = "unbounded below -> solver refuses" if kind.unbounded_below else "ok"
    print(f"  truncation K={k}: {tag}")
