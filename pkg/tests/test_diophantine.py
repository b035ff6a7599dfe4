import math

import pytest

from quadclass.arith import is_prime, is_squarefree
from quadclass.diophantine import (
    CASE_D_MOD4,
    DiophSolution,
    classify_case,
    solve_all_n,
    solve_general,
    solve_prime_power,
)


def naive_solutions(D, n, y_max):
    """Loop over x instead of y, matching against the set of n-th powers."""
    powers = {y**n: y for y in range(2, y_max + 1)}
    top = y_max**n
    out = []
    x = 0
    while x * x + D <= top:
        y = powers.get(x * x + D)
        if y is not None:
            out.append((x, y, n))
        x += 1
    return sorted(out, key=lambda s: s[1])


# per-exponent y bounds keeping the x loop of the naive oracle small
ORACLE_Y_MAX = {2: 200, 3: 200, 4: 200, 5: 60, 6: 30, 7: 20}


def test_solve_general_examples():
    assert solve_general(2, 3, 100) == [(5, 3, 3)]
    assert solve_general(19, 3, 100) == [(18, 7, 3)]
    assert solve_general(1, 3, 10**4) == []


def test_solve_general_reports_x_zero():
    # 0 + 8 = 2^3
    assert solve_general(8, 3, 10) == [(0, 2, 3)]


def test_solve_general_rejects_bad_input():
    with pytest.raises(ValueError):
        solve_general(0, 3, 10)
    with pytest.raises(ValueError):
        solve_general(5, 1, 10)


@pytest.mark.parametrize("n", sorted(ORACLE_Y_MAX))
def test_solve_general_matches_naive_oracle(n):
    y_max = ORACLE_Y_MAX[n]
    for D in range(1, 51):
        assert solve_general(D, n, y_max) == naive_solutions(D, n, y_max), (D, n)


def test_solve_all_n_examples():
    assert solve_all_n(19, 5, 100, True) == [(18, 7, 3), (22434, 55, 5)]
    assert solve_all_n(4, 3, 100, True) == [(2, 2, 3), (11, 5, 3)]
    assert solve_all_n(3, 9, 10**3, True) == []


def test_solve_all_n_even_exponents_and_order():
    sols = solve_all_n(7, 15, 50, odd_only=False)
    # 3^2 = 2 + 7 ... n = 2 included when not odd-only
    assert (3, 4, 2) in sols
    assert sols == sorted(sols, key=lambda s: (s.n, s.y))
    assert len(sols) == len(set(sols))
    assert all(s.check(7) for s in sols)


def test_solve_prime_power_examples():
    # 1 + 7 = 2^3, 25 + 7 = 2^5, 121 + 7 = 2^7
    assert solve_prime_power(7, 2, 13) == [(1, 2, 3), (5, 2, 5), (11, 2, 7)]
    assert solve_prime_power(7, 2, 5) == [(1, 2, 3), (5, 2, 5)]
    assert solve_prime_power(23, 3, 7) == [(2, 3, 3)]
    assert solve_prime_power(19, 7, 3) == [(18, 7, 3)]
    with pytest.raises(ValueError):
        solve_prime_power(7, 9, 5)


def test_solve_prime_power_ramanujan_nagell():
    # x^2 + 7 = 2^n for odd n: 3, 5, 7, 15 give x = 1, 5, 11, 181
    sols = solve_prime_power(7, 2, 31)
    assert [(s.x, s.n) for s in sols] == [(1, 3), (5, 5), (11, 7), (181, 15)]


@pytest.mark.parametrize(
    "x, p, tag, mod4",
    [
        (18, 7, "D_i", 3),
        (1, 2, "D_ii", 3),
        (4, 5, "B", 1),
        (3, 5, "A_i", 0),
        (2, 2, "A_ii", 0),
        (1, 3, "C", 2),
    ],
)
def test_classify_case(x, p, tag, mod4):
    case = classify_case(x, p)
    assert case.tag == tag
    assert case.D_mod4 == mod4


def test_classify_case_rejects_composite():
    with pytest.raises(ValueError):
        classify_case(3, 15)


def test_classify_case_consistent_with_solver():
    checked = 0
    for p in (p for p in range(2, 60) if is_prime(p)):
        for x in range(0, 200):
            for n in (3, 5, 7):
                D = p**n - x * x
                if D <= 0:
                    continue
                for s in solve_prime_power(D, p, 7):
                    assert D % 4 == classify_case(s.x, p).D_mod4
                    checked += 1
    assert checked > 1000
    assert set(CASE_D_MOD4.values()) == {0, 1, 2, 3}


def _field_D_values(limit):
    return [D for D in range(2, limit + 1) if D % 4 in (1, 2) and is_squarefree(D)]


def test_parity_and_coprimality_lemmas():
    seen = 0
    for D in _field_D_values(300):
        for n in (3, 5, 7, 9):
            for s in solve_general(D, n, 3000):
                seen += 1
                assert s.y % 2 == 1, (D, s)
                assert math.gcd(s.x, s.y) == 1, (D, s)
    assert seen > 0


def test_solutions_verify_exactly():
    for D in range(1, 80):
        for s in solve_all_n(D, 11, 500, odd_only=False):
            assert isinstance(s, DiophSolution)
            assert s.x * s.x + D == s.y**s.n
