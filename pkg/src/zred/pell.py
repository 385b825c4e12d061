"""Fundamental solutions of |t^2 - delta*u^2| = 4.

The fundamental solution is the one with the smallest u >= 1; when both
signs occur at that u the negative one is taken (that happens only for
delta = 5, where (1, 1, -4) beats (3, 1, +4)).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple


class PellSolution(NamedTuple):
    t: int
    u: int
    epsilon: int  # t*t - delta*u*u, always +4 or -4

    def __str__(self) -> str:
        return f"t={self.t} u={self.u} epsilon={self.epsilon:+d}"


def _check_delta(delta: int) -> int:
    delta = int(delta)
    if delta <= 0:
        raise ValueError(f"discriminant must be positive, got {delta}")
    if math.isqrt(delta) ** 2 == delta:
        raise ValueError(f"discriminant must not be a perfect square, got {delta}")
    return delta


def solve_pell_bruteforce(delta: int, u_max: int) -> list[PellSolution]:
    """Every solution with 1 <= u <= u_max, ordered by (u, t).

    Exhaustive search; exists as an independent check on
    fundamental_solution, not for production use.
    """
    delta = _check_delta(delta)
    if u_max < 1:
        raise ValueError("u_max must be at least 1")
    out = []
    for u in range(1, u_max + 1):
        du2 = delta * u * u
        for eps in (-4, 4):
            t2 = du2 + eps
            if t2 <= 0:
                continue
            t = math.isqrt(t2)
            if t * t == t2:
                out.append(PellSolution(t, u, eps))
    out.sort(key=lambda s: (s.u, s.t))
    return out


def _unit_from_omega(delta: int) -> PellSolution:
    # delta = 0 or 1 mod 4: run the continued fraction of (b0 + sqrt(delta))/2
    # with b0 the largest integer of delta's parity below sqrt(delta).  That
    # surd is reduced, so its expansion is purely periodic; one period of the
    # convergent matrix yields the fundamental unit.
    s = math.isqrt(delta)
    b0 = s if (s - delta) % 2 == 0 else s - 1
    p0, q0 = b0, 2
    m11, m12, m21, m22 = 1, 0, 0, 1
    p, q = p0, q0
    while True:
        a = (p + s) // q
        m11, m12, m21, m22 = a * m11 + m12, m11, a * m21 + m22, m21
        p = a * q - p
        q = (delta - p * p) // q
        if (p, q) == (p0, q0):
            break
    t, u = m21 * b0 + 2 * m22, m21
    eps = t * t - delta * u * u
    assert abs(eps) == 4, "period of a reduced surd must give a unit"
    return PellSolution(t, u, eps)


def _unit_from_sqrt(delta: int) -> PellSolution:
    # delta = 2 or 3 mod 4: every |t^2 - delta*u^2| = 4 solution has t, u
    # both even, so halve the problem to |x^2 - delta*y^2| = 1 and use the
    # classical expansion of sqrt(delta) up to the first denominator 1.
    s = math.isqrt(delta)
    p, q = 0, 1
    num1, num0 = 1, 0
    den1, den0 = 0, 1
    while True:
        a = (p + s) // q
        num1, num0 = a * num1 + num0, num1
        den1, den0 = a * den1 + den0, den1
        p = a * q - p
        q = (delta - p * p) // q
        if q == 1:
            break
    eps = num1 * num1 - delta * den1 * den1
    assert abs(eps) == 1
    return PellSolution(2 * num1, 2 * den1, 4 * eps)


@lru_cache(maxsize=1 << 16)
def fundamental_solution(delta: int) -> PellSolution:
    """Smallest-u solution of |t^2 - delta*u^2| = 4, preferring epsilon = -4.

    delta must be positive and not a perfect square.  Requires nothing of
    delta mod 4; for delta = 2, 3 mod 4 the parity forces t, u even.
    """
    delta = _check_delta(delta)
    for eps in (-4, 4):
        t2 = delta + eps
        if t2 > 0:
            t = math.isqrt(t2)
            if t * t == t2:
                return PellSolution(t, 1, eps)
    if delta % 4 in (0, 1):
        return _unit_from_omega(delta)
    return _unit_from_sqrt(delta)


def minus_four_solvable(delta: int) -> bool:
    """Whether t^2 - delta*u^2 = -4 has a solution."""
    return fundamental_solution(delta).epsilon == -4
