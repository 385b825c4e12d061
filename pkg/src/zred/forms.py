"""Integer binary quadratic forms and the unimodular substitution action.

A form (a, b, c) stands for a*x^2 + b*x*y + c*y^2.  Everything here is exact
integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

import math
from typing import NamedTuple


class Form(NamedTuple):
    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def content(self) -> int:
        """gcd of the coefficients; errors on the zero form."""
        g = math.gcd(self.a, self.b, self.c)
        if g == 0:
            raise ValueError("zero form has no content")
        return g

    def is_primitive(self) -> bool:
        return self.content() == 1

    def is_indefinite(self) -> bool:
        """True when the discriminant is positive and not a perfect square."""
        d = self.discriminant()
        return d > 0 and math.isqrt(d) ** 2 != d

    def is_g_reduced(self) -> bool:
        """Gauss-reduced: a*c < 0 and b > |a + c|."""
        return self.a * self.c < 0 and self.b > abs(self.a + self.c)

    def is_z_reduced(self) -> bool:
        """Zagier-reduced: a, b, c all positive and b > a + c."""
        return self.a > 0 and self.c > 0 and self.b > self.a + self.c

    def reverse(self) -> "Form":
        """Swap the outer coefficients: (a, b, c) -> (c, b, a)."""
        return Form(self.c, self.b, self.a)

    def rho(self) -> "Form":
        """Flip the signs of the outer coefficients: (a, b, c) -> (-a, b, -c)."""
        return Form(-self.a, self.b, -self.c)

    def scalar_mul(self, u: int) -> "Form":
        if u < 1:
            raise ValueError("scalar must be a positive integer")
        return Form(u * self.a, u * self.b, u * self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


class UnimodularMatrix(NamedTuple):
    alpha: int
    beta: int
    gamma: int
    delta: int

    def det(self) -> int:
        return self.alpha * self.delta - self.beta * self.gamma

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
        )


def form(a: int, b: int, c: int) -> Form:
    return Form(int(a), int(b), int(c))


def act(f: Form, m: UnimodularMatrix) -> Form:
    """Right action by substitution: f(alpha*x + beta*y, gamma*x + delta*y).

    Requires det(m) == 1, so the action composes: act(act(f, M), N) equals
    act(f, M @ N).
    """
    if m.det() != 1:
        raise ValueError(f"matrix {m} is not unimodular (det {m.det()})")
    a, b, c = f
    al, be, ga, de = m
    return Form(
        a * al * al + b * al * ga + c * ga * ga,
        2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
        a * be * be + b * be * de + c * de * de,
    )


def check_indefinite(f: Form) -> int:
    """Return the discriminant after checking it is positive and nonsquare."""
    f = Form(*f)
    d = f.discriminant()
    if d <= 0 or math.isqrt(d) ** 2 == d:
        raise ValueError(f"form {f} is not indefinite with nonsquare discriminant")
    return d


def form_to_json(f: Form) -> list:
    """Coefficients as decimal strings, the wire format for forms."""
    return [str(f.a), str(f.b), str(f.c)]


def form_from_json(obj) -> Form:
    if not isinstance(obj, (list, tuple)) or len(obj) != 3:
        raise ValueError(f"expected a 3-element array of coefficients, got {obj!r}")
    return Form(*(int(x) for x in obj))
