"""Class groups of imaginary quadratic fields and the equation x^2 + D = y^n."""

from .arith import factorize, is_perfect_square, is_prime, is_squarefree, isqrt, kronecker, mod_pow
from .classgroup import (
    ClassGroupSummary,
    QuadForm,
    class_group,
    compose,
    discriminant_of,
    enumerate_reduced_forms,
    form_order,
    has_element_of_order,
    reduce,
)
from .criteria import (
    CriterionReport,
    cor22_divisibility,
    cor24_hypothesis,
    residue_condition,
    thm21_insolvability,
    thm23_check,
    thm23_hypothesis,
)
from .diophantine import DiophSolution, classify_case, solve_all_n, solve_general, solve_prime_power
from .validator import SweepConfig, ValidationRecord, Verdict, golden_fixtures

__version__ = "0.1.0"
