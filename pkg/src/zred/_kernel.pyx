# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: same contract as _kernel_py, with int64 inner loops.

Inputs that could overflow 64-bit intermediates are routed to the pure
implementation, so results are identical across backends.
"""

from libc.stdint cimport int64_t
from libc.math cimport sqrt

from . import _kernel_py as _py

cdef int64_t FIT31 = 2147483647          # isqrt/product-safe bound
cdef int64_t FIT30 = 1073741823          # squares of 2*FIT30 stay in int64


def backend():
    return "compiled"


cdef inline int64_t fdiv(int64_t x, int64_t y):
    # floor division for y > 0 (C division truncates toward zero)
    cdef int64_t q = x / y
    if q * y > x:
        q -= 1
    return q


def euclid_quotients(num, den):
    """Quotient sequence of the Euclidean algorithm on num/den (den >= 1)."""
    if den < 1 or num < 1:
        raise ValueError("euclid_quotients needs positive integers")
    cdef list out = []
    n, d = num, den
    # big-int head: shrink with Python arithmetic until the tail fits
    while n > FIT31 or d > FIT31:
        q = n // d
        out.append(q)
        n, d = d, n - q * d
        if d == 0:
            return out
    cdef int64_t a = n, b = d, cq, r
    while b:
        cq = a / b
        out.append(cq)
        r = a - cq * b
        a = b
        b = r
    return out


def z_reduced_forms(delta):
    """All Zagier-reduced (a, b, c) with b*b - 4*a*c == delta, sorted."""
    if delta > FIT31:
        return _py.z_reduced_forms(delta)
    cdef int64_t dd = delta, d = 0, n, e, f, s, b, a, c
    cdef list out = []
    while d * d < dd:
        n = dd - d * d
        e = 1
        while e * e < n:
            if n % e == 0:
                f = n / e
                if (f - e) % 2 == 0:
                    s = (f - e) / 2
                    b = (e + f) / 2
                    if s >= d + 2 and (s - d) % 2 == 0:
                        a = (s + d) / 2
                        c = (s - d) / 2
                        out.append((a, b, c))
                        if d > 0:
                            out.append((c, b, a))
            e += 1
        d += 1
    out.sort()
    return out


def g_reduced_forms(delta):
    """All Gauss-reduced (a, b, c) of discriminant delta, both signs, sorted."""
    if delta > FIT31:
        return _py.g_reduced_forms(delta)
    cdef int64_t dd = delta, b = 1, rem, m, a, c
    cdef list out = []
    while b * b < dd:
        rem = dd - b * b
        if rem % 4 == 0:
            m = rem / 4
            a = 1
            while a * a <= m:
                if m % a == 0:
                    c = m / a
                    if b > (a - c if a > c else c - a):
                        out.append((a, b, -c))
                        out.append((-a, b, c))
                        if a != c:
                            out.append((c, b, -a))
                            out.append((-c, b, a))
                a += 1
        b += 1
    out.sort()
    return out


def denjoy_bits(p, q, delta, n):
    """First n Denjoy quotients of (p + sqrt(delta))/q as a 0/1 string."""
    if delta > FIT31 or p > FIT30 or p < -FIT30 or q > FIT30 or q < -FIT30:
        return _py.denjoy_bits(p, q, delta, n)
    cdef int64_t cp = p, cq = q, cd = delta, cs, fl, bit, p1, q1
    cdef Py_ssize_t i, cn = n
    cs = <int64_t> sqrt(<double> cd)
    while cs * cs > cd:
        cs -= 1
    while (cs + 1) * (cs + 1) <= cd:
        cs += 1
    cdef bytearray buf = bytearray(cn)
    for i in range(cn):
        if cp > FIT30 or cp < -FIT30 or cq > FIT30 or cq < -FIT30:
            # rare transient blow-up: finish exactly in Python
            tail = _py.denjoy_bits(cp, cq, cd, cn - i)
            return bytes(buf[:i]).decode("ascii") + tail
        if cq > 0:
            fl = fdiv(cp + cs, cq)
        else:
            fl = -fdiv(cp + cs, -cq) - 1
        bit = 1 if fl >= 1 else 0
        p1 = bit * cq - cp
        q1 = (cd - p1 * p1) / cq
        if q1 * cq + p1 * p1 != cd:
            raise AssertionError("surd state lost the divisibility invariant")
        cp = p1
        cq = q1
        buf[i] = 49 if bit else 48
    return bytes(buf).decode("ascii")
