"""Exact scalars: arbitrary-precision rationals and Gaussian rationals Q(i).

Every quantity in the engine is built from these; no floating point is used
anywhere.  ``Rat`` is gmpy2.mpq when available (much faster) and falls back
to fractions.Fraction.
"""
from __future__ import annotations

import math
import re

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat

from .errors import DivisionByZero

RAT_ZERO = Rat(0)
RAT_ONE = Rat(1)


def rat_sqrt(x) -> "Rat | None":
    """Exact square root of a rational, or None if x is not a square."""
    if x < 0:
        return None
    num, den = int(x.numerator), int(x.denominator)
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Rat(rn, rd)


_RAT_RE = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT_RE})(?!\s*\*?\s*i))?\s*"
    rf"(?:(?P<im>[+-]?\s*(?:\d+(?:/\d+)?\s*\*?\s*)?)i)?\s*$"
)


class GaussianRational:
    """An element of Q(i), stored as a pair of exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(RAT_ZERO) else Rat(re)
        self.im = im if type(im) is type(RAT_ZERO) else Rat(im)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_string(cls, s: str) -> GaussianRational:
        """Parse "p/q", "p/q+r/s*i", "r/s*i", "i", "-i"."""
        m = _GAUSS_RE.match(s)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"not a Gaussian rational: {s!r}")
        re_part = Rat(m.group("re")) if m.group("re") is not None else RAT_ZERO
        im_part = RAT_ZERO
        if m.group("im") is not None:
            txt = m.group("im").replace("*", "").replace(" ", "")
            if txt in ("", "+"):
                im_part = RAT_ONE
            elif txt == "-":
                im_part = -RAT_ONE
            else:
                im_part = Rat(txt)
        return cls(re_part, im_part)

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if not n:
            raise DivisionByZero("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return (QI_ONE / self) ** (-n)
        out, base = QI_ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """re^2 + im^2, a non-negative rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianRational:
        return QI_ONE / self

    def sqrt(self) -> "GaussianRational | None":
        """A square root in Q(i) if one exists, else None."""
        if self.is_zero():
            return QI_ZERO
        if not self.im:
            r = rat_sqrt(self.re)
            if r is not None:
                return GaussianRational(r, 0)
            r = rat_sqrt(-self.re)
            return None if r is None else GaussianRational(0, r)
        n = rat_sqrt(self.norm())
        if n is None:
            return None
        u2 = (n + self.re) / 2
        u = rat_sqrt(u2)
        if u is None or not u:
            return None
        v = self.im / (2 * u)
        cand = GaussianRational(u, v)
        return cand if cand * cand == self else None

    # -- comparisons / hashing ----------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- formatting -----------------------------------------------------------
    def __str__(self):
        if not self.im:
            return str(self.re)
        im_txt = f"{self.im}*i"
        if not self.re:
            return im_txt
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self):
        return f"QI({self})"


def _coerce(x):
    if type(x) is GaussianRational:
        return x
    if isinstance(x, int) or type(x) is type(RAT_ZERO):
        return GaussianRational(x)
    return NotImplemented


def QI(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, rationals, or "p/q" strings."""
    if isinstance(re, str):
        return GaussianRational(Rat(re), Rat(im) if isinstance(im, str) else im)
    return GaussianRational(re, im)


QI_ZERO = GaussianRational(0, 0)
QI_ONE = GaussianRational(1, 0)
QI_I = GaussianRational(0, 1)
