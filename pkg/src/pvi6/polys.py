"""Dense univariate polynomials over an exact field.

Coefficients may be GaussianRational or AlgebraicNumber (anything with
field-operator dunders); the zero scalar is inferred by multiplying an
existing coefficient by 0.
"""
from __future__ import annotations

from .scalars import QI_ONE, QI_ZERO, GaussianRational


class Poly:
    """Polynomial with ascending coefficient list; () is the zero polynomial."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    # -- constructors --------------------------------------------------------
    @classmethod
    def const(cls, scalar) -> Poly:
        return cls((scalar,))

    @classmethod
    def x_power(cls, n: int, scalar=QI_ONE) -> Poly:
        return cls((QI_ZERO,) * n + (scalar,))

    # -- basic queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.c

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.c) - 1

    def valuation(self) -> int:
        """Order of vanishing at 0 (raises on the zero polynomial)."""
        if not self.c:
            raise ValueError("valuation of zero polynomial")
        for j, cj in enumerate(self.c):
            if cj:
                return j
        raise AssertionError("unnormalized polynomial")

    def leading(self):
        if not self.c:
            raise ValueError("leading coefficient of zero polynomial")
        return self.c[-1]

    def coeff(self, j: int):
        if 0 <= j < len(self.c):
            return self.c[j]
        return QI_ZERO

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other: Poly) -> Poly:
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, bj in enumerate(b):
            out[j] = out[j] + bj
        return Poly(out)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly(tuple(-cj for cj in self.c))

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self.c or not other.c:
            return Poly()
        out = [QI_ZERO * self.c[0]] * (len(self.c) + len(other.c) - 1)
        for i, ai in enumerate(self.c):
            if not ai:
                continue
            for j, bj in enumerate(other.c):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar) -> Poly:
        return Poly(tuple(cj * scalar for cj in self.c))

    def __pow__(self, n: int) -> Poly:
        out = Poly((QI_ONE,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift_up(self, n: int) -> Poly:
        """Multiply by x^n."""
        if not self.c:
            return self
        return Poly((QI_ZERO,) * n + self.c)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        d = other.degree()
        lead_inv = _inv(other.c[-1])
        quo = [QI_ZERO * other.c[-1]] * max(0, len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            if not rem[k]:
                continue
            f = rem[k] * lead_inv
            quo[k - d] = f
            for j in range(d + 1):
                rem[k - d + j] = rem[k - d + j] - f * other.c[j]
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(_inv(self.c[-1]))

    def derivative(self) -> Poly:
        return Poly(tuple(j * cj for j, cj in enumerate(self.c) if j))

    def eval(self, point):
        acc = QI_ZERO * point
        for cj in reversed(self.c):
            acc = acc * point + cj
        return acc

    def taylor_shift(self, point) -> Poly:
        """Compose with (x + point): coefficients of p(x + point)."""
        out = Poly((QI_ZERO * point,))
        xp = Poly((point, QI_ONE))
        for cj in reversed(self.c):
            out = out * xp + Poly.const(cj)
        return out

    def compose(self, inner: Poly) -> Poly:
        out = Poly()
        for cj in reversed(self.c):
            out = out * inner + Poly.const(cj)
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __str__(self):
        if not self.c:
            return "0"
        parts = [f"({cj})*x^{j}" for j, cj in enumerate(self.c) if cj]
        return " + ".join(parts)

    __repr__ = __str__


def _inv(x):
    if isinstance(x, GaussianRational):
        return x.inverse()
    return x.inverse()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        r = a % b
        a, b = b, (r.monic() if not r.is_zero() else r)
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: list of (squarefree factor, multiplicity), monic."""
    p = p.monic()
    d = p.derivative()
    a = poly_gcd(p, d)
    if a.degree() <= 0:
        return [(p, 1)] if p.degree() > 0 else []
    out = []
    b = p.exact_div(a)
    c = d.exact_div(a)
    i = 1
    while b.degree() > 0:
        diff = c - b.derivative()
        g = poly_gcd(b, diff)
        if g.degree() > 0:
            out.append((g.monic(), i))
            b = b.exact_div(g)
            diff = diff.exact_div(g)
        c = diff
        i += 1
    return out
