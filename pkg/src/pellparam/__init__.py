"""Exact constructions for polynomial Pell equations with quadratic D."""

from .analysis import (
    SurveyRow,
    feasible_degrees,
    prescribed_degree_instance,
    squarefree_survey,
)
from .chebyshev import (
    cheb_t,
    cheb_u,
    doubling_identity_holds,
    pell_identity_holds,
    power_pair,
)
from .parametric import (
    ChebyshevDecomposition,
    Infeasible,
    IrrationalDecomposition,
    ParametricSolution,
    VerificationReport,
    clear_denominators,
    decompose,
    degree1_family,
    degree2_family,
    degree2_gcd,
    general_family,
    verify,
)
from .poly import Poly
from .quadfield import (
    DegreeReport,
    HalfUnit,
    PellSolution,
    cf_sqrt,
    divisors,
    fundamental_solution,
    fundamental_unit_norm1,
    is_square,
    is_squarefree,
    squarefree_decompose,
    unit_cube_integral,
    unit_group_index,
)

__version__ = "0.1.0"

__all__ = [
    "ChebyshevDecomposition",
    "DegreeReport",
    "HalfUnit",
    "Infeasible",
    "IrrationalDecomposition",
    "ParametricSolution",
    "PellSolution",
    "Poly",
    "SurveyRow",
    "VerificationReport",
    "cf_sqrt",
    "cheb_t",
    "cheb_u",
    "clear_denominators",
    "decompose",
    "degree1_family",
    "degree2_family",
    "degree2_gcd",
    "divisors",
    "doubling_identity_holds",
    "feasible_degrees",
    "fundamental_solution",
    "fundamental_unit_norm1",
    "general_family",
    "is_square",
    "is_squarefree",
    "pell_identity_holds",
    "power_pair",
    "prescribed_degree_instance",
    "squarefree_decompose",
    "squarefree_survey",
    "unit_cube_integral",
    "unit_group_index",
    "verify",
]
