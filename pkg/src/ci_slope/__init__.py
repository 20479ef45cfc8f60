"""Exact invariants of complete-intersection curve fibrations and surface singularities.

Submodules
----------
exact_arith           exact scalars, polynomial binomials, alternating sums sigma(m, l)
chow_ring             numerical Chow ring of P_B(E), Chern characters, Todd class, GRR
fibration_invariants  K^2, chi, genus, slope bound and the (u, v, r) coefficients
slope_elimination     linear elimination producing the slope identity
singularity_calc      Milnor number, signature and its upper bound
oracles               brute-force recomputations for cross-checking
verify                grid sweep of every identity
cli                   command line front end
"""

from .exact_arith import Rational, binom_poly, format_rational, sigma_closed, sigma_direct, sigma_recursive
from .chow_ring import ChowClass, RingSpec, evaluate_top, grr_pushforward_degree
from .fibration_invariants import (
    FibrationConfig,
    InvariantReport,
    chi_incl_excl,
    genus,
    invariants_closed,
    k2_chow,
    lambda_nd,
    uvr,
)
from .slope_elimination import EliminationCoefficients, LinearForm, eliminate
from .singularity_calc import SignatureReport, SingularityInput, check_theorem

__version__ = "0.1.0"
