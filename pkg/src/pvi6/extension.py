"""Degree-2 extensions of Q(i) and arithmetic in them.

An extension is fixed by a monic quadratic w^2 + p*w + q irreducible over
Q(i); elements are u + v*w.  Higher-degree needs are out of scope and raise
UnsupportedExtension at the call sites that would require them.
"""
from __future__ import annotations

from .errors import DivisionByZero, IncompatibleExtensions, UnsupportedExtension
from .scalars import QI_ONE, QI_ZERO, GaussianRational


class QuadraticExtension:
    """The field Q(i)[w] / (w^2 + p*w + q), p and q Gaussian rationals."""

    __slots__ = ("p", "q")

    def __init__(self, p: GaussianRational, q: GaussianRational):
        disc = p * p - 4 * q
        if disc.sqrt() is not None:
            raise ValueError("quadratic splits over Q(i); use GaussianRational roots")
        self.p = p
        self.q = q

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticExtension)
            and self.p == other.p
            and self.q == other.q
        )

    def __hash__(self):
        return hash((self.p, self.q))

    def root(self) -> AlgebraicNumber:
        """The designated root w of the minimal polynomial."""
        return AlgebraicNumber(QI_ZERO, QI_ONE, self)

    def conjugate_root(self) -> AlgebraicNumber:
        return AlgebraicNumber(-self.p, -QI_ONE, self)

    def __repr__(self):
        return f"QuadraticExtension(w^2+({self.p})*w+({self.q}))"


class AlgebraicNumber:
    """u + v*w with w the designated root of an irreducible quadratic."""

    __slots__ = ("u", "v", "ext")

    def __init__(self, u, v, ext: QuadraticExtension):
        self.u = u if type(u) is GaussianRational else GaussianRational(u)
        self.v = v if type(v) is GaussianRational else GaussianRational(v)
        self.ext = ext

    # -- housekeeping -------------------------------------------------------
    def _pair(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.ext != self.ext:
                raise IncompatibleExtensions(
                    f"cannot mix {self.ext!r} with {other.ext!r}"
                )
            return other
        if isinstance(other, (int, GaussianRational)) or type(other) is type(
            QI_ZERO.re
        ):
            return AlgebraicNumber(other, QI_ZERO, self.ext)
        return None

    def in_base_field(self) -> bool:
        return self.v.is_zero()

    def demote(self) -> GaussianRational:
        """Return the Q(i) value of an element with zero w-component."""
        if not self.in_base_field():
            raise UnsupportedExtension("value is not in Q(i)")
        return self.u

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def __bool__(self):
        return not self.is_zero()

    # -- field operations ------------------------------------------------------
    def __add__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(self.u + o.u, self.v + o.v, self.ext)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(self.u - o.u, self.v - o.v, self.ext)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AlgebraicNumber(-self.u, -self.v, self.ext)

    def __mul__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        # (u1+v1 w)(u2+v2 w) with w^2 = -p w - q
        vv = self.v * o.v
        return AlgebraicNumber(
            self.u * o.u - self.ext.q * vv,
            self.u * o.v + self.v * o.u - self.ext.p * vv,
            self.ext,
        )

    __rmul__ = __mul__

    def field_norm(self) -> GaussianRational:
        """Product with the extension conjugate; lies in Q(i)."""
        p, q = self.ext.p, self.ext.q
        return self.u * self.u - p * self.u * self.v + q * self.v * self.v

    def conjugate_in_extension(self) -> AlgebraicNumber:
        return AlgebraicNumber(self.u - self.ext.p * self.v, -self.v, self.ext)

    def inverse(self) -> AlgebraicNumber:
        n = self.field_norm()
        if n.is_zero():
            raise DivisionByZero("division by zero in quadratic extension")
        conj = self.conjugate_in_extension()
        ninv = n.inverse()
        return AlgebraicNumber(conj.u * ninv, conj.v * ninv, self.ext)

    def __truediv__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = AlgebraicNumber(QI_ONE, QI_ZERO, self.ext)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sqrt(self) -> "AlgebraicNumber | None":
        """A square root inside the same extension, or None."""
        p, q = self.ext.p, self.ext.q
        if self.v.is_zero():
            r = self.u.sqrt()
            if r is not None:
                return AlgebraicNumber(r, QI_ZERO, self.ext)
            disc = p * p - 4 * q
            b2 = 4 * self.u / disc
            b = b2.sqrt()
            if b is None:
                return None
            return AlgebraicNumber(p * b / 2, b, self.ext)
        # y = A + B w, y^2 = self: (p^2-4q) B^4 + (2 p v - 4 u) B^2 + v^2 = 0
        aa = p * p - 4 * q
        bb = 2 * p * self.v - 4 * self.u
        cc = self.v * self.v
        inner = bb * bb - 4 * aa * cc
        root = inner.sqrt()
        if root is None:
            return None
        for sign in (1, -1):
            b2 = (-bb + sign * root) / (2 * aa)
            b = b2.sqrt()
            if b is None or b.is_zero():
                continue
            a = (self.v + p * b2) / (2 * b)
            cand = AlgebraicNumber(a, b, self.ext)
            if cand * cand == self:
                return cand
        return None

    # -- comparisons ---------------------------------------------------------
    def __eq__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        return hash((self.u, self.v, self.ext))

    def __str__(self):
        if self.v.is_zero():
            return str(self.u)
        return f"({self.u})+({self.v})*w  [w^2+({self.ext.p})w+({self.ext.q})=0]"

    __repr__ = __str__


def scalar_arith(x, y, op: str):
    """Field operation on exact scalars; mixed kinds promote to the extension."""
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    if op == "*":
        return x * y
    if op == "/":
        if isinstance(y, GaussianRational) and y.is_zero():
            raise DivisionByZero("division by zero")
        if isinstance(y, AlgebraicNumber) and y.is_zero():
            raise DivisionByZero("division by zero")
        return x / y
    raise ValueError(f"unknown op {op!r}")


def quadratic_roots(a2, a1, a0):
    """Exact roots of a2*t^2 + a1*t + a0 over Q(i), extending if needed.

    Returns a pair of GaussianRational when the discriminant is a square in
    Q(i), otherwise a conjugate pair of AlgebraicNumber in the extension
    generated by the monic version of the quadratic.
    """
    if a2.is_zero():
        raise ValueError("not a quadratic")
    p = a1 / a2
    q = a0 / a2
    disc = p * p - 4 * q
    r = disc.sqrt()
    if r is not None:
        return ((-p + r) / 2, (-p - r) / 2)
    ext = QuadraticExtension(p, q)
    return (ext.root(), ext.conjugate_root())
