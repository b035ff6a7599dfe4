"""Exact integer primitives: powers, roots, primality, factorization, Kronecker symbol."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

TRIAL_LIMIT = 10**6

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Jaeschke / Sorenson-Webster: the first 13 prime bases are exact below this bound.
_MR_EXACT_BOUND = 3317044064679887385961981


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


def isqrt(v: int) -> int:
    """Floor of the square root of ``v``."""
    if v < 0:
        raise ValueError(f"isqrt of negative number {v}")
    return math.isqrt(v)


def is_perfect_square(v: int) -> Optional[int]:
    """Return the non-negative root of ``v`` if it is a square, else None."""
    if v < 0:
        return None
    # squares mod 16 lie in {0, 1, 4, 9}; cheap rejection before the root
    if (0x213 >> (v & 15)) & 1 == 0:
        return None
    r = math.isqrt(v)
    return r if r * r == v else None


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas_probable_prime(n: int) -> bool:
    if is_perfect_square(n) is not None:
        return False
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D|n) = -1
    D = 5
    while True:
        k = kronecker(D, n)
        if k == -1:
            break
        if k == 0 and abs(D) != n:
            return False
        D = -D + 2 if D < 0 else -D - 2
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(v: int) -> int:
        return (v + n if v & 1 else v) // 2 % n

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(v: int) -> bool:
    """Deterministic primality.

    Miller-Rabin with the first 13 prime bases is proven exact for
    v < 3.3e24; above that a Baillie-PSW test is used (no known
    counterexample).
    """
    if v < 2:
        return False
    for p in _SMALL_PRIMES:
        if v % p == 0:
            return v == p
    if v < 43 * 43:
        return True
    if v < _MR_EXACT_BOUND:
        return all(_strong_probable_prime(v, a) for a in _SMALL_PRIMES)
    return _strong_probable_prime(v, 2) and _strong_lucas_probable_prime(v)


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: Tuple[Tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def product(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def _pollard_brent(n: int) -> int:
    """Return a non-trivial factor of the odd composite ``n``."""
    # deterministic seeding: walk c = 1, 2, ... until a split appears
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda t: (t * t + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def _split_large(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = is_perfect_square(n)
    if r is not None:
        _split_large(r, out)
        _split_large(r, out)
        return
    d = _pollard_brent(n)
    _split_large(d, out)
    _split_large(n // d, out)


def factorize(v: int) -> Factorization:
    """Complete prime factorization: trial division to 10**6, then Pollard-Brent rho."""
    if v < 1:
        raise ValueError(f"factorize requires v >= 1, got {v}")
    n = v
    found: dict = {}
    for p in (2, 3):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    p, step = 5, 2
    while p <= TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        if p * p > n:
            found[n] = found.get(n, 0) + 1
        else:
            _split_large(n, found)
    return Factorization(v, tuple(sorted(found.items())))


def is_squarefree(v: int) -> bool:
    if v < 1:
        raise ValueError(f"is_squarefree requires v >= 1, got {v}")
    return all(e == 1 for _, e in factorize(v))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), with (a|0) = 1 iff a = +-1 and (a|-1) = sign(a)."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = (n & -n).bit_length() - 1
    n >>= v
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out
