"""Bernstein-Vandermonde interpolation: Bezout-matrix inverses, structured
factorizations, conditioning in the L^2 norm, and block LU on the simplex."""

from .bases import (
    bernstein_basis,
    bernstein_eval,
    de_casteljau,
    equispaced_nodes,
    lagrange_l2_norms,
    legendre_to_bernstein_matrix,
    node_polynomial_bernstein,
    random_stratified_nodes,
)
from .bezout import BezoutOperator, bezout_closed_form, bezout_factored, bezout_recurrence
from .conditioning import (
    conditioning_sweep,
    kappa_bound,
    kappa_m_to_2,
    kappa_m_to_2_via_mass,
    mass_matrix,
    spectral_check,
)
from .estimators import BernsteinInterpolator, SimplexBernsteinInterpolator
from .experiments import ExperimentConfig, SolveReport, run_experiment
from .simplex import (
    block_lu_factors,
    block_lu_solve,
    build_lattice,
    elevation,
    simplex_mass_matrix,
    simplex_vandermonde,
)
from .structured import (
    DiagonalMatrix,
    HankelMatrix,
    ToeplitzMatrix,
    condition_number_2,
    lu_factor,
    lu_factor_nopivot,
)
from .validation import SingularMatrixError
from .vandermonde import (
    Method,
    bernstein_vandermonde,
    factored_inverse,
    factored_inverse_equispaced,
    inverse_via_bezout,
    solve,
)

__version__ = "0.1.0"
