"""Bounded exact solvers for x^2 + D = y^n and x^2 + D = p^n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple

from .arith import is_perfect_square, is_prime


class DiophSolution(NamedTuple):
    x: int
    y: int
    n: int

    def check(self, D: int) -> bool:
        return self.x * self.x + D == self.y**self.n


def solve_general(D: int, n: int, y_max: int, y_min: int = 2) -> List[DiophSolution]:
    """All (x, y, n) with x >= 0 and y_min <= y <= y_max, sorted by y.

    Scans y and tests y^n - D for squareness.
    """
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    out = []
    y = max(y_min, 2)
    # skip y with y^n < D
    while y <= y_max and y**n < D:
        y += 1
    ok64, ok63, ok65, ok11 = (_admissible_residues(D, n, m) for m in _SIEVE_MODULI)
    for y in range(y, y_max + 1):
        if not (ok64[y & 63] and ok63[y % 63] and ok65[y % 65] and ok11[y % 11]):
            continue
        x = is_perfect_square(y**n - D)
        if x is not None:
            out.append(DiophSolution(x, y, n))
    return out


_SIEVE_MODULI = (64, 63, 65, 11)
_SQUARES_MOD = {m: frozenset(r * r % m for r in range(m)) for m in _SIEVE_MODULI}


def _admissible_residues(D: int, n: int, m: int) -> List[bool]:
    """ok[r] is False when y = r (mod m) makes y^n - D a non-square mod m."""
    squares = _SQUARES_MOD[m]
    return [(pow(r, n, m) - D) % m in squares for r in range(m)]


def exponent_range(n_max: int, odd_only: bool) -> range:
    return range(3, n_max + 1, 2) if odd_only else range(2, n_max + 1)


def solve_all_n(D: int, n_max: int, y_max: int, odd_only: bool = True) -> List[DiophSolution]:
    """Union of :func:`solve_general` over exponents up to ``n_max``, sorted by (n, y)."""
    found = set()
    for n in exponent_range(n_max, odd_only):
        found.update(solve_general(D, n, y_max))
    return sorted(found, key=lambda s: (s.n, s.y, s.x))


def solve_prime_power(D: int, p: int, n_max: int) -> List[DiophSolution]:
    """Solutions of x^2 + D = p^n with odd 3 <= n <= n_max."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = []
    for n in range(3, n_max + 1, 2):
        rest = p**n - D
        if rest < 0:
            continue
        x = is_perfect_square(rest)
        if x is not None:
            out.append(DiophSolution(x, p, n))
    return out


# tag -> D mod 4 implied by the parity of x and the class of p
CASE_D_MOD4 = {"A_i": 0, "A_ii": 0, "B": 1, "C": 2, "D_i": 3, "D_ii": 3}


@dataclass(frozen=True)
class ResidueCase:
    tag: str
    x_parity: str
    p_class: str

    @property
    def D_mod4(self) -> int | None:
        return CASE_D_MOD4.get(self.tag)


def p_class_of(p: int) -> str:
    if p == 2:
        return "2"
    return "1 mod 4" if p % 4 == 1 else "3 mod 4"


def classify_case(x: int, p: int) -> ResidueCase:
    """Case (a)-(d) of x^2 + D = p^n from the parity of x and p mod 4.

    All six (parity, class of p) combinations appear in the table, so every
    input gets exactly one tag. The implied D mod 4 is valid for odd n only.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    parity = "even" if x % 2 == 0 else "odd"
    pc = p_class_of(p)
    tag = {
        ("odd", "1 mod 4"): "A_i",
        ("even", "2"): "A_ii",
        ("even", "1 mod 4"): "B",
        ("odd", "3 mod 4"): "C",
        ("even", "3 mod 4"): "D_i",
        ("odd", "2"): "D_ii",
    }[parity, pc]
    return ResidueCase(tag, parity, pc)


def verify_solutions(D: int, solutions: Iterable[DiophSolution]) -> bool:
    return all(s.check(D) for s in solutions)
