"""Reduction operators on indefinite forms and cycle structure.

Both theories send (a, b, c) to (a n^2 - b n + c, 2 a n - b, a) and
differ only in the multiplier n: the Zagier step takes the ceiling of
(b + sqrt(delta)) / (2a) and keeps a > 0 throughout, the Gauss step on
reduced forms takes the sign-matched floor and flips sign(a) each time.
Each step is the right action of a determinant-1 substitution, so classes
are preserved.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from . import kernel
from .contfrac import surd
from .forms import Form, check_indefinite, form


class OrbitResult(NamedTuple):
    pre_period: tuple
    cycle: tuple


def reducing_number(f: Form) -> int:
    """ceil((b + sqrt(delta)) / (2a)); the multiplier used by r_z."""
    f = form(*f)
    d = check_indefinite(f)
    if f.a == 0:
        raise ValueError(f"form must have a != 0, got {f}")
    return surd(f.b, 2 * f.a, d).ceil()


def r_z(f: Form) -> Form:
    """One Zagier reduction step.

    Sends (a, b, c) to (a n^2 - b n + c, 2 a n - b, a) with n the reducing
    number; lands on a Zagier-reduced form after finitely many steps and
    permutes them.
    """
    f = form(*f)
    n = reducing_number(f)
    return Form(f.a * n * n - f.b * n + f.c, 2 * f.a * n - f.b, f.a)


def r_g(f: Form) -> Form:
    """One Gauss reduction step on a Gauss-reduced form.

    The multiplier is sign-matched to a with magnitude
    floor((b + sqrt(delta)) / (2|a|)), so the leading coefficient flips
    sign every step.
    """
    f = form(*f)
    d = check_indefinite(f)
    if not f.is_g_reduced():
        raise ValueError(f"r_g needs a Gauss-reduced form, got {f}")
    m = surd(f.b, 2 * abs(f.a), d).floor()
    n = m if f.a > 0 else -m
    g = Form(f.a * n * n - f.b * n + f.c, 2 * f.a * n - f.b, f.a)
    assert g.is_g_reduced(), f"Gauss step left the reduced set at {f}"
    return g


def orbit_to_cycle(f: Form, op: str = "z") -> OrbitResult:
    """Iterate a reduction step until a state repeats.

    Returns the pre-period and the cycle; r_z reaches a cycle of reduced
    forms from any indefinite form, r_g requires a reduced start.
    """
    f = form(*f)
    check_indefinite(f)
    if op not in ("z", "g"):
        raise ValueError(f"op must be 'z' or 'g', got {op!r}")
    step = r_z if op == "z" else r_g
    seen: dict = {}
    seq = []
    g = f
    while g not in seen:
        seen[g] = len(seq)
        seq.append(g)
        g = step(g)
    i = seen[g]
    cycle = tuple(seq[i:])
    if op == "z":
        assert all(h.is_z_reduced() for h in cycle)
    return OrbitResult(tuple(seq[:i]), cycle)


def _valid_delta(delta: int) -> int:
    d = int(delta)
    if d <= 0 or math.isqrt(d) ** 2 == d:
        raise ValueError(f"delta must be a positive nonsquare, got {d}")
    return d


def enumerate_z_reduced(delta: int) -> list:
    """All Zagier-reduced forms of discriminant delta, sorted.

    Empty for delta = 2, 3 mod 4, where no integral form exists.
    """
    return [Form(*t) for t in kernel.z_reduced_forms(_valid_delta(delta))]


def enumerate_g_reduced(delta: int) -> list:
    """All Gauss-reduced forms of discriminant delta, both signs of a."""
    return [Form(*t) for t in kernel.g_reduced_forms(_valid_delta(delta))]


def cycles(delta: int, op: str = "z") -> list:
    """The reduction cycles on the reduced forms of discriminant delta.

    Each cycle is a tuple starting from its least member; the list is
    ordered by those representatives.
    """
    if op not in ("z", "g"):
        raise ValueError(f"op must be 'z' or 'g', got {op!r}")
    reduced = enumerate_z_reduced(delta) if op == "z" else enumerate_g_reduced(delta)
    step = r_z if op == "z" else r_g
    seen = set()
    out = []
    for f in reduced:
        if f in seen:
            continue
        cyc = [f]
        g = step(f)
        while g != f:
            cyc.append(g)
            g = step(g)
        i = cyc.index(min(cyc))
        cyc = cyc[i:] + cyc[:i]
        seen.update(cyc)
        out.append(tuple(cyc))
    out.sort(key=lambda c: c[0])
    return out


def z_caliber(f: Form) -> int:
    """Length of the Zagier cycle attached to f's class."""
    return len(orbit_to_cycle(f, "z").cycle)
