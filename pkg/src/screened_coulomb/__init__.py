"""Bound-state spectrum toolkit for the screened Coulomb potential V(r) = -exp(-C/r)/r.

The package bundles a finite-difference radial eigensolver (Sturm-sequence
bisection plus inverse iteration, with Richardson refinement and a rescaled
large-C mode), an independent Numerov shooting oracle, closed-form eigenvalue
approximations with their frozen reference tables, and Hellmann-Feynman
consistency checks.  All quantities are in Hartree atomic units.
"""

from .analytic import (
    ApproxEigenvalue,
    Formula,
    coulomb_energy,
    effective_angular_momentum,
    harmonic_energy,
    k1_energy,
    n_from_nu,
    nu_from_nl,
    scaled_energy,
)
from .hft import HftReport, check_hft_scaled, check_hft_unscaled, expectation
from .potentials import (
    SCREENED,
    HarmonicExpansion,
    PotentialKind,
    RadialProblem,
    eval_effective,
    eval_potential,
    harmonic_expansion,
    tail_product,
)
from .shooting import BracketError, shoot_eigenvalue
from .solver import (
    BOUND_STATE_CUTOFF,
    BoundState,
    DiscreteOperator,
    EigenSolverError,
    Grid,
    SolverConfig,
    Spectrum,
    UnboundedPotentialError,
    build_grid,
    count_nodes,
    discretize,
    eigen_lowest,
    eigenvector,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxEigenvalue",
    "BOUND_STATE_CUTOFF",
    "BoundState",
    "BracketError",
    "DiscreteOperator",
    "EigenSolverError",
    "Formula",
    "Grid",
    "HarmonicExpansion",
    "HftReport",
    "PotentialKind",
    "RadialProblem",
    "SCREENED",
    "SolverConfig",
    "Spectrum",
    "UnboundedPotentialError",
    "build_grid",
    "check_hft_scaled",
    "check_hft_unscaled",
    "coulomb_energy",
    "count_nodes",
    "discretize",
    "effective_angular_momentum",
    "eigen_lowest",
    "eigenvector",
    "eval_effective",
    "eval_potential",
    "expectation",
    "harmonic_energy",
    "harmonic_expansion",
    "k1_energy",
    "n_from_nu",
    "nu_from_nl",
    "scaled_energy",
    "shoot_eigenvalue",
    "solve",
    "tail_product",
]
