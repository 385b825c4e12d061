"""The dictionary between reduced forms, bead strings, and necklaces.

gamma and beta read a form's bead string off the fundamental automorph:
with (t, u) the fundamental solution of |t^2 - delta u^2| = 4 and
2z = t + b u, the string is the continued fraction of z/(a u) for a
Gauss-reduced form with a > 0, and of z/(z - a u) for a Zagier-reduced
form.  The expansion length parity is pinned by the sign of t^2 -
delta u^2, which makes both maps single-valued.

tau and xi go back from strings to forms through continuants, and mu
carries Gauss-reduced forms onto Zagier-reduced ones.
"""

from __future__ import annotations

from typing import NamedTuple

from .contfrac import cf_expand, continuant
from .forms import Form, check_indefinite, form
from .pell import fundamental_solution
from .strings import ColoredBin, alternating_necklace, check_nat, necklace, sb


def _automorph_z(f: Form) -> tuple:
    d = check_indefinite(f)
    t, u, eps = fundamental_solution(d)
    num = t + f.b * u
    assert num % 2 == 0, "t and b*u must share parity on one discriminant"
    return num // 2, u, eps


def gamma(f: Form) -> tuple:
    """Bead string of a Gauss-reduced form with a > 0.

    The result determines f up to the choice cut of its cycle; its length
    parity is odd exactly when t^2 - delta u^2 = -4.
    """
    f = form(*f)
    if not f.is_g_reduced() or f.a < 0:
        raise ValueError(f"gamma needs a Gauss-reduced form with a > 0, got {f}")
    z, u, eps = _automorph_z(f)
    return cf_expand(z, f.a * u, "odd" if eps == -4 else "even")


def beta(f: Form) -> tuple:
    """Bead string of a Zagier-reduced form.

    Expansion of z/(z - a u), with parity even exactly when
    t^2 - delta u^2 = -4.  Always at least two beads.
    """
    f = form(*f)
    if not f.is_z_reduced():
        raise ValueError(f"beta needs a Zagier-reduced form, got {f}")
    z, u, eps = _automorph_z(f)
    den = z - f.a * u
    assert den > 0, "z exceeds a*u on Zagier-reduced forms"
    s = cf_expand(z, den, "even" if eps == -4 else "odd")
    assert len(s) >= 2, f"bead string of {f} collapsed to one entry"
    return s


def sigma(f: Form) -> str:
    """Binary string of a Zagier-reduced form: stars and bars on beta."""
    return sb(beta(f))


def sigma_bar(f: Form):
    """Class invariant: the necklace of sigma, with alternating bar colors
    remembered when the weight is even (odd weight identifies the colors)."""
    s = sigma(f)
    if s.count("1") % 2 == 1:
        return necklace(s)
    return alternating_necklace(ColoredBin(s, s.index("1")))


def mu(f: Form) -> Form:
    """Zagier-reduced companion of a Gauss-reduced form.

    Shifts by the substitution x -> x + y on positive a, x -> y, y -> x + y
    mirrored on negative a; two-to-one onto its image overall but injective
    on each sign of a.
    """
    f = form(*f)
    check_indefinite(f)
    if not f.is_g_reduced():
        raise ValueError(f"mu needs a Gauss-reduced form, got {f}")
    if f.a > 0:
        g = Form(f.a, 2 * f.a + f.b, f.a + f.b + f.c)
    else:
        g = Form(f.a + f.b + f.c, f.b + 2 * f.c, f.c)
    assert g.is_z_reduced(), f"mu left the Zagier-reduced set at {f}"
    return g


def tau(s) -> Form:
    """Form of a bead string (two or more beads), inverse to beta on the
    discriminants k*k + 4 and k*k - 4.

    Built from continuants of the string with an end lowered: the middle
    coefficient adds the untouched and the doubly lowered versions.
    """
    t = check_nat(s, min_len=2)
    a = continuant((t[0] - 1,) + t[1:])
    c = continuant(t[:-1] + (t[-1] - 1,))
    k = continuant(t)
    kk = continuant((t[0] - 1,) + t[1:-1] + (t[-1] - 1,))
    g = Form(a, k + kk, c)
    assert g.discriminant() == (k - kk) ** 2 + (4 if len(t) % 2 == 0 else -4)
    assert g.is_z_reduced(), f"tau left the Zagier-reduced set at {t}"
    return g


def xi(s) -> Form:
    """Gauss-reduced form with a > 0 attached to a nonempty string.

    Companion of tau through the mu diagrams; discriminant
    (K + K_inner)^2 -+ 4 by the continuant determinant identity.
    """
    t = check_nat(s, min_len=1)
    a = continuant(t[1:])
    c = -continuant(t[:-1])
    inner = continuant(t[1:-1]) if len(t) >= 2 else 0
    k = continuant(t)
    g = Form(a, k - inner, c)
    assert g.discriminant() == (k + inner) ** 2 + (4 if len(t) % 2 == 1 else -4)
    assert g.is_g_reduced() and g.a > 0, f"xi left the Gauss-reduced set at {t}"
    return g


class ClassInvariants(NamedTuple):
    weight: int
    length: int
    parity: str


def class_invariants(f: Form) -> ClassInvariants:
    """Weight and length of sigma with the parity they share on a class."""
    s = sigma(f)
    w = s.count("1")
    return ClassInvariants(w, len(s), "odd" if w % 2 else "even")


def denjoy_period(f: Form) -> str:
    """Binary expansion period of (b - 2a + sqrt(delta)) / (2a).

    Reads sigma with every 0 thickened to 01; primitive for primitive f.
    """
    return "".join("01" if ch == "0" else "1" for ch in sigma(f))
