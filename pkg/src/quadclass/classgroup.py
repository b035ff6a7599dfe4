"""Form class groups of imaginary quadratic fields.

Positive definite binary quadratic forms ``a x^2 + b xy + c y^2`` of the
field discriminant stand in for ideal classes of Q(sqrt(-D)). The group is
computed in full: every reduced form, the order of each, and the exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Tuple

from .arith import factorize, is_squarefree, lcm


def discriminant_of(D: int) -> int:
    """Fundamental discriminant of Q(sqrt(-D)) for squarefree ``D >= 1``."""
    if D < 1 or not is_squarefree(D):
        raise ValueError(f"D must be a squarefree positive integer, got {D}")
    return -D if D % 4 == 3 else -4 * D


def check_discriminant(disc: int) -> int:
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError(f"not a negative discriminant: {disc}")
    return disc


class QuadForm(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self
        return abs(b) <= a <= c and (b >= 0 or (abs(b) != a and a != c))

    def inverse(self) -> "QuadForm":
        return reduce(QuadForm(self.a, -self.b, self.c))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def principal_form(disc: int) -> QuadForm:
    k = disc % 2
    return QuadForm(1, k, (k - disc) // 4)


def form_from_ab(a: int, b: int, disc: int) -> QuadForm:
    num = b * b - disc
    if a <= 0 or num % (4 * a):
        raise ValueError(f"no form ({a},{b},.) of discriminant {disc}")
    return QuadForm(a, b, num // (4 * a))


def reduce(f: QuadForm) -> QuadForm:
    """The unique reduced form properly equivalent to the positive definite ``f``."""
    a, b, c = f
    if a <= 0 or b * b - 4 * a * c >= 0:
        raise ValueError(f"form {tuple(f)} is not positive definite")
    while True:
        # normalize: -a < b <= a
        if not -a < b <= a:
            r = (a - b) // (2 * a)
            b, c = b + 2 * r * a, a * r * r + b * r + c
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return QuadForm(a, b, c)


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Gauss composition of two forms of equal discriminant, reduced."""
    disc = f.disc
    if g.disc != disc:
        raise ValueError(f"discriminant mismatch: {disc} vs {g.disc}")
    a1, b1, c1 = f
    a2, b2, c2 = g
    if a1 > a2:
        a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        # y1 is the a2 cofactor: a2*y1 + a1*v = d
        d, y1, _ = _xgcd(a2, a1)
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, x2, y2 = _xgcd(s, d)
        y2 = -y2
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (c2 * d1 + r * (b2 + v2 * r)) // v1
    return reduce(QuadForm(a3, b3, c3))


def power(f: QuadForm, k: int) -> QuadForm:
    result = principal_form(f.disc)
    base = reduce(f)
    while k > 0:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


@lru_cache(maxsize=4096)
def _reduced_forms(disc: int) -> Tuple[QuadForm, ...]:
    forms = []
    a_max = math.isqrt(-disc // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            forms.append(QuadForm(a, b, c))
    forms.sort(key=lambda f: (f.a, abs(f.b), f.b < 0))
    return tuple(forms)


def enumerate_reduced_forms(disc: int) -> List[QuadForm]:
    """One reduced form per class, sorted by a, then |b|, positive b first."""
    return list(_reduced_forms(check_discriminant(disc)))


def class_number(disc: int) -> int:
    return len(_reduced_forms(check_discriminant(disc)))


def form_order(f: QuadForm, h: int | None = None) -> int:
    """Order of the class of ``f``.

    Starts from the class number and strips prime factors while the
    power stays principal, so only O(log h) compositions are spent.
    """
    disc = f.disc
    if h is None:
        h = class_number(disc)
    identity = principal_form(disc)
    order = h
    for q, _ in factorize(h):
        while order % q == 0 and power(f, order // q) == identity:
            order //= q
    return order


@dataclass(frozen=True)
class ClassGroupSummary:
    D: int
    disc: int
    h: int
    exponent: int
    forms: Tuple[QuadForm, ...]
    orders: Tuple[int, ...]

    def order_counts(self) -> dict:
        counts: dict = {}
        for o in self.orders:
            counts[o] = counts.get(o, 0) + 1
        return dict(sorted(counts.items()))

    def has_order(self, n: int) -> bool:
        return self.exponent % n == 0


@lru_cache(maxsize=4096)
def class_group(D: int) -> ClassGroupSummary:
    disc = discriminant_of(D)
    forms = _reduced_forms(disc)
    h = len(forms)
    orders = tuple(form_order(f, h) for f in forms)
    return ClassGroupSummary(D, disc, h, lcm(*orders), forms, orders)


def has_element_of_order(D: int, n: int) -> bool:
    """True iff Cl(Q(sqrt(-D))) contains an element of order exactly ``n``.

    In a finite abelian group the realized orders are exactly the
    divisors of the exponent.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return class_group(D).exponent % n == 0


def clear_caches() -> None:
    _reduced_forms.cache_clear()
    class_group.cache_clear()
