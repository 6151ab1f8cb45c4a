"""Geometric construction of the degree-2 weight-30 Siegel modular form
with character.

The package builds the product of fifteen coset-indexed factors, each the
defining polynomial of a coordinate tetrahedron in the projective space of
second-order theta constants, and certifies numerically that the product
transforms with weight 30 and the quadratic permutation character, and
that it is proportional to the classical signed theta-triple construction.
"""

from .chars import (EVEN_CHARS, M0, ODD_CHARS, act_char, act_set, chi_p,
                    classify_quadruple, classify_triple, even_quadruples,
                    even_triples, format_char, pair_sign, parity, parse_char,
                    psi_p)
from .construction import (AZY_NORMALIZATION, LambdaEstimate,
                           alternate_system, estimate_lambda,
                           geometric_crosscheck, invariance_word, phi,
                           phi_gamma, phi_modularity_error,
                           rep_independence_error)
from .forms import (azy, azy_eval, chi5_determinant, chi5_product, chi10,
                    chi12, mono_key, monomial_at, mu_ratio, p2, slash_unit,
                    symmetrize_exact, symmetrize_numeric)
from .geometry import (ADDITION_TABLE, Tetrahedron, addition_residual,
                       all_tetrahedra, f_m, faces_from_vertices,
                       intersect_quadrics, quadric_value, tetrahedron)
from .reports import CheckResult, EvalReport
from .siegel import SiegelPoint, sample_tau, sample_taus
from .symplectic import (ETA0, GENERATORS, IDENTITY, J, PRINCIPAL2,
                         THETA0_2, CosetSystem, SubgroupSpec,
                         SymplecticMatrix, act_tau, automorphy_factor,
                         coset_reps, gl_rotation, in_subgroup,
                         lower_translation, random_word, translation)
from .theta import (ThetaValue, kappa4, kappa_numeric, kappa_probes,
                    theta_all_even, theta_constant, theta_constant_g1,
                    theta_gradient, theta_second_order, theta_second_vector,
                    transform_unit, truncation_radius, xi_chi, xi_numerator)

__version__ = "0.1.0"

__all__ = [
    "EVEN_CHARS", "ODD_CHARS", "M0", "act_char", "act_set", "chi_p",
    "pair_sign", "classify_triple", "classify_quadruple", "even_triples",
    "even_quadruples", "format_char", "parse_char", "parity", "psi_p",
    "SiegelPoint", "sample_tau", "sample_taus",
    "SymplecticMatrix", "CosetSystem", "SubgroupSpec", "IDENTITY", "J",
    "ETA0", "GENERATORS", "PRINCIPAL2", "THETA0_2", "translation",
    "lower_translation", "gl_rotation", "act_tau", "automorphy_factor",
    "coset_reps", "in_subgroup", "random_word",
    "ThetaValue", "theta_constant", "theta_constant_g1",
    "theta_second_order", "theta_second_vector", "theta_all_even",
    "theta_gradient", "truncation_radius", "transform_unit", "xi_chi",
    "xi_numerator", "kappa4", "kappa_numeric", "kappa_probes",
    "mono_key", "monomial_at", "slash_unit", "symmetrize_exact",
    "symmetrize_numeric", "chi5_product", "chi5_determinant", "chi10",
    "chi12", "p2", "azy", "azy_eval", "mu_ratio",
    "ADDITION_TABLE", "Tetrahedron", "addition_residual", "all_tetrahedra",
    "f_m", "faces_from_vertices", "intersect_quadrics", "quadric_value",
    "tetrahedron",
    "AZY_NORMALIZATION", "LambdaEstimate", "alternate_system",
    "estimate_lambda", "geometric_crosscheck", "invariance_word", "phi",
    "phi_gamma", "phi_modularity_error", "rep_independence_error",
    "CheckResult", "EvalReport",
    "__version__",
]
