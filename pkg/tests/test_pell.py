"""Checks for the |t^2 - delta u^2| = 4 solver."""

import math

import pytest

from zred.pell import (
    PellSolution,
    fundamental_solution,
    minus_four_solvable,
    solve_pell_bruteforce,
)

# independently computed minimal solutions
FROZEN = {
    2: (2, 2, -4),
    3: (4, 2, 4),
    5: (1, 1, -4),
    6: (10, 4, 4),
    12: (4, 1, 4),
    17: (8, 2, -4),
    20: (4, 1, -4),
    21: (5, 1, 4),
    61: (39, 5, -4),
    68: (8, 1, -4),
}


@pytest.mark.parametrize("delta,expected", sorted(FROZEN.items()))
def test_frozen_values(delta, expected):
    assert fundamental_solution(delta) == PellSolution(*expected)


def test_solution_identity_sweep():
    for delta in range(2, 2001):
        if math.isqrt(delta) ** 2 == delta:
            continue
        t, u, eps = fundamental_solution(delta)
        assert t >= 1 and u >= 1
        assert eps in (-4, 4)
        assert t * t - delta * u * u == eps


def test_minimality_against_bruteforce():
    # brute search below the found u; skipped where the unit is too large
    # to enumerate, which the identity sweep still covers
    for delta in range(2, 400):
        if math.isqrt(delta) ** 2 == delta:
            continue
        sol = fundamental_solution(delta)
        if sol.u > 3000:
            continue
        sols = solve_pell_bruteforce(delta, sol.u)
        assert sols[0] == sol
        assert all(s.u == sol.u for s in sols if s.t <= sol.t)


def test_bruteforce_ordering_and_validation():
    sols = solve_pell_bruteforce(5, 10)
    assert sols == sorted(sols, key=lambda s: (s.u, s.t))
    assert PellSolution(1, 1, -4) in sols
    assert PellSolution(3, 1, 4) in sols
    with pytest.raises(ValueError):
        solve_pell_bruteforce(9, 10)
    with pytest.raises(ValueError):
        solve_pell_bruteforce(5, 0)


def test_rejects_squares_and_nonpositive():
    for bad in (-4, 0, 1, 4, 9, 16, 625):
        with pytest.raises(ValueError):
            fundamental_solution(bad)


def test_minus_four_on_primes():
    # classical: t^2 - p u^2 = -4 is solvable for primes 1 mod 4 and
    # never for primes 3 mod 4
    def primes(n):
        sieve = [True] * n
        for i in range(2, n):
            if sieve[i]:
                yield i
                for j in range(i * i, n, i):
                    sieve[j] = False

    for p in primes(500):
        if p % 4 == 1:
            assert minus_four_solvable(p), p
        elif p % 4 == 3:
            assert not minus_four_solvable(p), p


def test_str_format():
    assert str(fundamental_solution(17)) == "t=8 u=2 epsilon=-4"
    assert str(fundamental_solution(12)) == "t=4 u=1 epsilon=+4"


def test_large_discriminant_is_fast_enough():
    # a worst-ish case regulator among small inputs; must not hang
    sol = fundamental_solution(1621)
    assert sol.t * sol.t - 1621 * sol.u * sol.u == sol.epsilon
    big = fundamental_solution(10**10 + 1)
    assert big.t * big.t - (10**10 + 1) * big.u * big.u == big.epsilon
