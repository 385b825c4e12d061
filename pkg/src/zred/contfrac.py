"""Continuants, parity-controlled expansions, and quadratic surd engines.

Three expansion flavours share one exact state machine on (p, q, delta)
triples representing (p + sqrt(delta))/q:

  regular   quotient = floor,   next = 1/(x - quotient)
  negative  quotient = ceiling, next = 1/(quotient - x)
  binary    quotient = 1 if x > 1 else 0, next = 1/(x - quotient)

No floating point anywhere; floors of surds come from integer square roots.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

from . import kernel

NatString = tuple  # tuple of positive ints (zero ends allowed where noted)


def _as_entries(s: Iterable, what: str, allow_zero_ends: bool = False) -> tuple:
    t = tuple(int(q) for q in s)
    for i, q in enumerate(t):
        if q < 1 and not (allow_zero_ends and q == 0 and i in (0, len(t) - 1)):
            raise ValueError(f"{what} entries must be positive, got {t}")
    return t


def continuant(s: Iterable) -> int:
    """K(q1, ..., ql): numerator of the continued fraction [q1; q2, ..., ql].

    K() = 1 and K(q) = q; a zero at either end drops that end, matching
    [0, q2, ...] = [q3, ...] and [..., ql-1, 0] = [..., ql-2].  Zeros in
    the interior are rejected.
    """
    t = _as_entries(s, "continuant", allow_zero_ends=True)
    a, b = 1, 0
    for q in t:
        a, b = q * a + b, a
    return a


def continuant_matrix(s: Iterable) -> tuple:
    """((K(q1..ql), K(q1..q_{l-1})), (K(q2..ql), K(q2..q_{l-1}))).

    Equals the product of the matrices ((q, 1), (1, 0)) over the entries.
    """
    t = _as_entries(s, "continuant")
    m11, m12, m21, m22 = 1, 0, 0, 1
    for q in t:
        m11, m12, m21, m22 = q * m11 + m12, m11, q * m21 + m22, m21
    return ((m11, m12), (m21, m22))


def cf_expand(num: int, den: int, parity: str) -> tuple:
    """Continued fraction of num/den >= 1 with the requested length parity.

    gcd(num, den) may be anything; the expansion only sees the ratio.
    The two canonical expansions differ by (..., ql) <-> (..., ql - 1, 1);
    num == den is allowed and yields (1), which exists only with parity
    'odd'.
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    num, den = int(num), int(den)
    if den < 1 or num < den:
        raise ValueError("cf_expand needs num >= den >= 1")
    q = kernel.euclid_quotients(num, den)
    if num == den:
        if parity == "even":
            raise ValueError("1 has no even-length expansion with positive entries")
        return (1,)
    want_odd = parity == "odd"
    if (len(q) % 2 == 1) != want_odd:
        if q[-1] >= 2:
            q[-1] -= 1
            q.append(1)
        else:
            q.pop()
            q[-1] += 1
    return tuple(q)


class QuadraticSurd(NamedTuple):
    """(p + sqrt(delta))/q, stored with the invariant q | delta - p*p.

    Any (p, q, delta) with q != 0 and delta a positive nonsquare is
    accepted; triples missing the invariant are rescaled by |q|, which
    leaves the value fixed.  With the invariant, equal values have equal
    (p, q, delta) for fixed delta, so tuple equality is value equality.
    """

    p: int
    q: int
    delta: int

    def __str__(self) -> str:
        return f"({self.p}+sqrt({self.delta}))/{self.q}"

    def floor(self) -> int:
        s = math.isqrt(self.delta)
        if self.q > 0:
            return (self.p + s) // self.q
        return -((self.p + s) // (-self.q)) - 1

    def ceil(self) -> int:
        # the value is irrational, so ceiling = floor + 1
        return self.floor() + 1

    def cmp(self, m: int) -> int:
        """Sign of self - m for an integer m (never 0)."""
        t = self.p - m * self.q
        if t >= 0:
            sn = 1
        else:
            sn = 1 if t * t < self.delta else -1
        return sn if self.q > 0 else -sn

    def conj_cmp(self, m: int) -> int:
        """Sign of conjugate((p - sqrt(delta))/q) - m (never 0)."""
        t = self.p - m * self.q
        if t <= 0:
            sn = -1
        else:
            sn = 1 if t * t > self.delta else -1
        return sn if self.q > 0 else -sn


def surd(p: int, q: int, delta: int) -> QuadraticSurd:
    p, q, delta = int(p), int(q), int(delta)
    if q == 0:
        raise ValueError("surd denominator must be nonzero")
    if delta <= 0 or math.isqrt(delta) ** 2 == delta:
        raise ValueError(f"delta must be a positive nonsquare, got {delta}")
    if (delta - p * p) % q:
        k = abs(q)
        p, delta, q = p * k, delta * k * k, q * k
    return QuadraticSurd(p, q, delta)


def floor_surd(x: QuadraticSurd) -> int:
    return x.floor()


def ceil_surd(x: QuadraticSurd) -> int:
    return x.ceil()


def _reg_step(p: int, q: int, delta: int, s: int) -> tuple:
    a = (p + s) // q if q > 0 else -((p + s) // (-q)) - 1
    p1 = a * q - p
    q1, r = divmod(delta - p1 * p1, q)
    assert r == 0, "surd state lost the divisibility invariant"
    return a, p1, q1


def _neg_step(p: int, q: int, delta: int, s: int) -> tuple:
    a = (p + s) // q + 1 if q > 0 else -((p + s) // (-q))
    p1 = a * q - p
    q1, r = divmod(p1 * p1 - delta, q)
    assert r == 0, "surd state lost the divisibility invariant"
    return a, p1, q1


def reg_cf_surd(x: QuadraticSurd, n: int) -> tuple:
    """First n regular continued fraction quotients of x."""
    p, q, d = x
    s = math.isqrt(d)
    out = []
    for _ in range(int(n)):
        a, p, q = _reg_step(p, q, d, s)
        out.append(a)
    return tuple(out)


def neg_cf_surd(x: QuadraticSurd, n: int) -> tuple:
    """First n negative (ceiling) continued fraction quotients of x."""
    p, q, d = x
    s = math.isqrt(d)
    out = []
    for _ in range(int(n)):
        a, p, q = _neg_step(p, q, d, s)
        out.append(a)
    return tuple(out)


def denjoy_surd(x: QuadraticSurd, n: int) -> str:
    """First n binary quotients of x > 0: 1 where the tail exceeds 1.

    Tail values stay positive, so the quotient sequence never shows two
    zeros in a row.
    """
    if x.cmp(0) < 0:
        raise ValueError("binary expansion needs a positive value")
    return kernel.denjoy_bits(x.p, x.q, x.delta, int(n))


def reg_cf_period(x: QuadraticSurd) -> tuple:
    """(pre_period, period) of the regular expansion of x."""
    p, q, d = x
    s = math.isqrt(d)
    seen: dict = {}
    quots = []
    while (p, q) not in seen:
        seen[p, q] = len(quots)
        a, p, q = _reg_step(p, q, d, s)
        quots.append(a)
    i = seen[p, q]
    return tuple(quots[:i]), tuple(quots[i:])


def neg_cf_period(x: QuadraticSurd) -> tuple:
    """(pre_period, period) of the negative expansion of x.

    One step sends any value above 1, so the expansion is eventually
    periodic for every surd.
    """
    p, q, d = x
    s = math.isqrt(d)
    seen: dict = {}
    quots = []
    while (p, q) not in seen:
        seen[p, q] = len(quots)
        a, p, q = _neg_step(p, q, d, s)
        quots.append(a)
    i = seen[p, q]
    return tuple(quots[:i]), tuple(quots[i:])


def is_purely_periodic_reg(x: QuadraticSurd) -> bool:
    return reg_cf_period(x)[0] == ()


def is_purely_periodic_neg(x: QuadraticSurd) -> bool:
    return neg_cf_period(x)[0] == ()


def reg_to_denjoy(period: Iterable) -> str:
    """One regular period rewritten as a binary quotient period.

    Quotient q becomes 1 followed by q - 1 copies of 01.
    """
    t = _as_entries(period, "regular period")
    if not t:
        raise ValueError("period must be nonempty")
    return "".join("1" + "01" * (q - 1) for q in t)


def neg_to_reg_stream(period: Iterable, n: int) -> tuple:
    """First n regular quotients of the value with negative period `period`.

    Entries must all be >= 2 and not all 2 (all 2s is the constant 1).
    A run of k 2s between larger entries contributes the regular pair
    (k + 1, next - 2); the opening entry contributes q1 - 1.
    """
    t = tuple(int(q) for q in period)
    if not t or any(q < 2 for q in t):
        raise ValueError("negative period entries must be >= 2")
    if all(q == 2 for q in t):
        raise ValueError("the all-2s period is the rational 1")
    n = int(n)
    out = [t[0] - 1]
    i = 1

    def nxt() -> int:
        nonlocal i
        v = t[i % len(t)]
        i += 1
        return v

    while len(out) < n:
        run = 0
        v = nxt()
        while v == 2:
            run += 1
            v = nxt()
        out.append(run + 1)
        out.append(v - 2)
    return tuple(out[:n])
