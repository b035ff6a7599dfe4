"""Decidable versions of the insolvability and divisibility criteria.

Each criterion splits into hypotheses, checked exactly, and a claim,
checked against ground truth (bounded solver search or the fully computed
class group). Every inequality is an exact cross-multiplied integer
comparison.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from .arith import is_prime, is_squarefree
from .classgroup import class_group
from .diophantine import ResidueCase, classify_case, solve_general


class CriterionId(str, Enum):
    THM21 = "thm21"
    COR22 = "cor22"
    THM23 = "thm23"
    COR24 = "cor24"
    GOLDEN = "golden"


@dataclass
class CriterionReport:
    criterion_id: CriterionId
    inputs: Dict[str, Any]
    hypotheses_hold: bool
    hypothesis_detail: List[Tuple[str, bool]]
    claim: str
    claim_holds_empirically: Optional[bool] = None
    evidence: Dict[str, Any] = field(default_factory=dict)
    # True when the empirical check is a bounded search rather than exact
    bounded: bool = False

    def hypothesis(self, name: str) -> bool:
        return dict(self.hypothesis_detail)[name]

    def to_dict(self) -> Dict[str, Any]:
        d = asdict(self)
        d["criterion_id"] = self.criterion_id.value
        d["hypothesis_detail"] = [[k, v] for k, v in self.hypothesis_detail]
        return d


def _require_odd_exponent(n: int) -> None:
    if n <= 1 or n % 2 == 0:
        raise ValueError(f"n must be an odd integer > 1, got {n}")


@dataclass(frozen=True)
class ResidueWitness:
    D: int
    n: int
    holds_for_all_a: bool
    violating_a: Optional[int] = None


def residue_condition(D: int, n: int) -> ResidueWitness:
    """Whether n * a^(n-1) is never +-1 mod D, over every residue a.

    The first residue a in [0, D) where the congruence does hit +-1 is
    returned as the witness.
    """
    _require_odd_exponent(n)
    if D < 2:
        raise ValueError(f"D must be >= 2, got {D}")
    targets = {1 % D, (D - 1) % D}
    for a in range(D):
        if n * pow(a, n - 1, D) % D in targets:
            return ResidueWitness(D, n, False, a)
    return ResidueWitness(D, n, True)


def _group_evidence(D: int) -> Dict[str, Any]:
    g = class_group(D)
    return {"disc": g.disc, "h": g.h, "exponent": g.exponent}


def thm21_insolvability(D: int, n: int, verify_y_max: int) -> CriterionReport:
    """Hypotheses of the insolvability criterion for x^2 + D = y^n, plus a bounded search."""
    odd_n = n > 1 and n % 2 == 1
    squarefree = D >= 1 and is_squarefree(D)
    mod4 = D % 4 in (1, 2)
    witness = residue_condition(D, n) if odd_n and D >= 2 else None
    residue = witness is not None and witness.holds_for_all_a

    evidence: Dict[str, Any] = {"y_max": verify_y_max}
    coprime = False
    if squarefree:
        evidence.update(_group_evidence(D))
        coprime = math.gcd(n, evidence["h"]) == 1
    if witness is not None and witness.violating_a is not None:
        evidence["violating_a"] = witness.violating_a

    detail = [
        ("n_odd_gt_1", odd_n),
        ("D_squarefree", squarefree),
        ("D_mod4_in_1_2", mod4),
        ("residue_condition_all_a", residue),
        ("gcd_n_h_is_1", coprime),
    ]
    hold = all(v for _, v in detail)

    claim_ok = None
    if D >= 1 and n >= 2:
        sols = solve_general(D, n, verify_y_max)
        evidence["solutions"] = [list(s) for s in sols]
        if hold:
            claim_ok = not sols
    return CriterionReport(
        CriterionId.THM21,
        {"D": D, "n": n, "y_max": verify_y_max},
        hold,
        detail,
        "insolvable",
        claim_ok,
        evidence,
        bounded=True,
    )


def cor22_divisibility(D: int, p_exp: int, verify_y_max: int) -> CriterionReport:
    """If a solution of x^2 + D = y^p exists under the residue hypotheses, p | h."""
    if p_exp % 2 == 0 or not is_prime(p_exp):
        raise ValueError(f"exponent must be an odd prime, got {p_exp}")
    squarefree = D >= 1 and is_squarefree(D)
    mod4 = D % 4 in (1, 2)
    witness = residue_condition(D, p_exp) if D >= 2 else None
    residue = witness is not None and witness.holds_for_all_a

    evidence: Dict[str, Any] = {"y_max": verify_y_max}
    if witness is not None and witness.violating_a is not None:
        evidence["violating_a"] = witness.violating_a
    sols = solve_general(D, p_exp, verify_y_max) if D >= 1 else []
    evidence["solutions"] = [list(s) for s in sols]
    if squarefree:
        evidence.update(_group_evidence(D))

    detail = [
        ("D_squarefree", squarefree),
        ("D_mod4_in_1_2", mod4),
        ("residue_condition_all_a", residue),
        ("solution_found", bool(sols)),
    ]
    hold = all(v for _, v in detail)
    claim_ok = evidence["h"] % p_exp == 0 if hold else None
    return CriterionReport(
        CriterionId.COR22,
        {"D": D, "n": p_exp, "y_max": verify_y_max},
        hold,
        detail,
        "p divides h",
        claim_ok,
        evidence,
    )


def _prime_power_inequality(x: int, p: int, n: int) -> Tuple[Optional[str], bool]:
    """The case (I/II/III) an (x, p) pair falls under and whether its bound holds."""
    pn = p**n
    xx = x * x
    if p % 4 == 3:
        return "I", 2 * xx < pn
    if p == 2 and x % 2 == 1:
        return "II", xx < 2 ** (n - 1)
    if p % 4 == 1 and x % 2 == 0:
        return "III", xx * (p - 1) < pn
    return None, False


@dataclass(frozen=True)
class Thm23Hypothesis:
    x: int
    p: int
    n: int
    D: int
    case: Optional[str]
    inequality_holds: bool
    D_squarefree: bool
    residue_case: ResidueCase

    @property
    def holds(self) -> bool:
        return self.case is not None and self.inequality_holds and self.D_squarefree


def thm23_hypothesis(x: int, p: int, n: int) -> Thm23Hypothesis:
    _require_odd_exponent(n)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    D = p**n - x * x
    if D <= 0:
        raise ValueError(f"p^n must exceed x^2 (got D = {D})")
    case, ineq = _prime_power_inequality(x, p, n)
    return Thm23Hypothesis(x, p, n, D, case, ineq, is_squarefree(D), classify_case(x, p))


# maximal order each case's argument works in
_CASE_ASSUMED_ORDER = {"I": "Z[sqrt(-D)]", "II": "Z[sqrt(-D)]", "III": "Z[(1+sqrt(-D))/2]"}


def maximal_order(D: int) -> str:
    return "Z[(1+sqrt(-D))/2]" if D % 4 == 3 else "Z[sqrt(-D)]"


def thm23_check(x: int, p: int, n: int) -> CriterionReport:
    """Order-n element claim for D = p^n - x^2, checked on the full class group."""
    hyp = thm23_hypothesis(x, p, n)
    detail = [
        ("case_applies", hyp.case is not None),
        ("inequality_holds", hyp.inequality_holds),
        ("D_squarefree", hyp.D_squarefree),
    ]
    evidence: Dict[str, Any] = {
        "D": hyp.D,
        "case": hyp.case,
        "residue_case": hyp.residue_case.tag,
        "D_mod4": hyp.D % 4,
    }
    claim_ok = None
    if hyp.D_squarefree:
        g = class_group(hyp.D)
        evidence.update(disc=g.disc, h=g.h, exponent=g.exponent)
        evidence["maximal_order"] = maximal_order(hyp.D)
        if hyp.case is not None:
            evidence["case_assumed_order"] = _CASE_ASSUMED_ORDER[hyp.case]
            evidence["order_assumption_matches"] = (
                evidence["case_assumed_order"] == evidence["maximal_order"]
            )
        if hyp.holds:
            claim_ok = g.has_order(n)
    return CriterionReport(
        CriterionId.THM23,
        {"x": x, "p": p, "n": n},
        hyp.holds,
        detail,
        "element of order n exists",
        claim_ok,
        evidence,
    )


def cor24_hypothesis(x0: int, y0: int, n: int) -> CriterionReport:
    """Evaluate the three solvability conditions on a candidate (x0, y0, n).

    Reports which conditions hold and whether x0^2 + D = y0^n with
    D = y0^n - x0^2 positive and squarefree. No implication between the
    two is asserted, so the claim is never marked as empirically checked.
    Condition (iii) is evaluated both on x0 and on x0^2.
    """
    _require_odd_exponent(n)
    yn = y0**n
    xx = x0 * x0
    prime = is_prime(y0)
    cond_i = prime and y0 % 4 == 3 and 2 * xx < yn
    cond_ii = x0 % 2 == 1 and y0 == 2 and xx < 2 ** (n - 1)
    cond_iii_shape = x0 % 2 == 0 and prime and y0 % 4 == 1
    cond_iii = cond_iii_shape and x0 * (y0 - 1) < yn
    cond_iii_sq = cond_iii_shape and xx * (y0 - 1) < yn
    D = yn - xx
    detail = [
        ("cond_i", cond_i),
        ("cond_ii", cond_ii),
        ("cond_iii", cond_iii),
        ("cond_iii_squared", cond_iii_sq),
    ]
    evidence = {
        "D": D,
        "D_positive": D > 0,
        "D_squarefree": D > 0 and is_squarefree(D),
        "equation_holds": D > 0 and xx + D == yn,
    }
    return CriterionReport(
        CriterionId.COR24,
        {"x0": x0, "y0": y0, "n": n},
        cond_i or cond_ii or cond_iii,
        detail,
        "integral solution",
        None,
        evidence,
    )
