"""Truncated Laurent series in one variable with honest known-order tracking.

A series stores its first known exponent, the known coefficients, and the
first *unknown* exponent ``upto`` (None when the series is exact, i.e. a
Laurent polynomial known in full).  Every operation propagates the tightest
window it can certify; an unknown coefficient is never treated as zero.
"""
from __future__ import annotations

from .errors import UnknownOrder, ZeroSeries
from .scalars import QI_ONE, QI_ZERO, GaussianRational, QI_I

_INF = float("inf")


def _fin(u):
    return _INF if u is None else u


def _unfin(u):
    return None if u == _INF else int(u)


class VariableKind:
    """The variable change behind the series variable.

    complicated: chi = 1/(ln x + C), so x d/dx = -chi^2 d/dchi.
    exotic:      chi = C*x^(i*theta),  so x d/dx = i*theta*chi d/dchi.
    """

    __slots__ = ("name", "theta", "itheta")

    def __init__(self, name: str, theta=None):
        if name not in ("complicated", "exotic"):
            raise ValueError(f"unknown variable kind {name!r}")
        if name == "exotic":
            if theta is None or not theta:
                raise ValueError("exotic kind needs a nonzero rational theta")
            self.itheta = QI_I * GaussianRational(theta)
        else:
            theta = None
            self.itheta = None
        self.name = name
        self.theta = theta

    def __eq__(self, other):
        return (
            isinstance(other, VariableKind)
            and self.name == other.name
            and self.theta == other.theta
        )

    def __hash__(self):
        return hash((self.name, self.theta))

    def __repr__(self):
        if self.name == "exotic":
            return f"VariableKind(exotic, theta={self.theta})"
        return "VariableKind(complicated)"


COMPLICATED = VariableKind("complicated")


def exotic(theta) -> VariableKind:
    return VariableKind("exotic", theta)


class LaurentSeries:
    __slots__ = ("minexp", "coeffs", "upto")

    def __init__(self, minexp: int, coeffs, upto: int | None):
        c = list(coeffs)
        if upto is not None:
            keep = upto - minexp
            if keep < 0:
                keep = 0
            del c[keep:]
        while c and not c[-1]:
            c.pop()
        lead = 0
        while lead < len(c) and not c[lead]:
            lead += 1
        if lead:
            c = c[lead:]
            minexp += lead
        self.minexp = minexp if c else 0
        self.coeffs = tuple(c)
        self.upto = upto

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, upto: int | None = None) -> LaurentSeries:
        return cls(0, (), upto)

    @classmethod
    def constant(cls, scalar, upto: int | None = None) -> LaurentSeries:
        if isinstance(scalar, int):
            scalar = GaussianRational(scalar)
        return cls(0, (scalar,), upto)

    @classmethod
    def x_power(cls, e: int, scalar=QI_ONE, upto: int | None = None) -> LaurentSeries:
        return cls(e, (scalar,), upto)

    @classmethod
    def from_pairs(cls, pairs, upto: int | None = None) -> LaurentSeries:
        """From an iterable of (exponent, scalar)."""
        pairs = [(e, s) for e, s in pairs if s]
        if not pairs:
            return cls.zero(upto)
        lo = min(e for e, _ in pairs)
        hi = max(e for e, _ in pairs)
        c = [QI_ZERO] * (hi - lo + 1)
        for e, s in pairs:
            c[e - lo] = c[e - lo] + s
        return cls(lo, c, upto)

    # -- inspection --------------------------------------------------------------
    def is_zero_known(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    def is_exact(self) -> bool:
        return self.upto is None

    def order(self):
        """Exponent of the first nonzero term; None marks the exact zero series."""
        if self.coeffs:
            return self.minexp
        if self.upto is None:
            return None
        raise UnknownOrder(
            f"series is zero to its known order (upto {self.upto}); order uncertifiable"
        )

    def order_lower_bound(self):
        if self.coeffs:
            return self.minexp
        return _fin(self.upto)

    def known_relative_order(self) -> int | None:
        """The J of the contract: exponents >= minexp+J unknown (None = exact)."""
        if self.upto is None:
            return None
        return self.upto - (self.minexp if self.coeffs else self.upto)

    def coeff(self, e: int):
        """Known coefficient at exponent e; raises UnknownOrder past the window."""
        if self.upto is not None and e >= self.upto:
            raise UnknownOrder(f"coefficient at {e} is beyond known window {self.upto}")
        j = e - self.minexp
        if self.coeffs and 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return QI_ZERO

    def known_pairs(self):
        return [
            (self.minexp + j, cj) for j, cj in enumerate(self.coeffs) if cj
        ]

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, GaussianRational)):
            other = LaurentSeries.constant(other)
        u = min(_fin(self.upto), _fin(other.upto))
        if not self.coeffs:
            return LaurentSeries(other.minexp, other.coeffs, _unfin(u))
        if not other.coeffs:
            return LaurentSeries(self.minexp, self.coeffs, _unfin(u))
        lo = min(self.minexp, other.minexp)
        hi = max(self.minexp + len(self.coeffs), other.minexp + len(other.coeffs))
        c = [QI_ZERO] * (hi - lo)
        for j, cj in enumerate(self.coeffs):
            c[self.minexp - lo + j] = cj
        for j, cj in enumerate(other.coeffs):
            k = other.minexp - lo + j
            c[k] = c[k] + cj
        return LaurentSeries(lo, c, _unfin(u))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.minexp, tuple(-c for c in self.coeffs), self.upto)

    def __sub__(self, other):
        if isinstance(other, (int, GaussianRational)):
            other = LaurentSeries.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, GaussianRational)):
            return self.scale(other)
        u = min(
            _fin(self.upto) + other.order_lower_bound(),
            _fin(other.upto) + self.order_lower_bound(),
        )
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(_unfin(u))
        lo = self.minexp + other.minexp
        n = len(self.coeffs) + len(other.coeffs) - 1
        if u != _INF:
            n = min(n, int(u) - lo)
            if n <= 0:
                return LaurentSeries.zero(_unfin(u))
        c = [QI_ZERO] * n
        for i, ai in enumerate(self.coeffs):
            if not ai:
                continue
            jmax = min(len(other.coeffs), n - i)
            for j in range(jmax):
                bj = other.coeffs[j]
                if bj:
                    c[i + j] = c[i + j] + ai * bj
        return LaurentSeries(lo, c, _unfin(u))

    __rmul__ = __mul__

    def scale(self, scalar):
        if isinstance(scalar, int):
            scalar = GaussianRational(scalar)
        return LaurentSeries(
            self.minexp, tuple(c * scalar for c in self.coeffs), self.upto
        )

    def shift(self, n: int):
        """Multiply by chi^n."""
        return LaurentSeries(
            self.minexp + n, self.coeffs, None if self.upto is None else self.upto + n
        )

    def invert(self, nterms: int | None = None) -> LaurentSeries:
        """Reciprocal; for an exact input, nterms bounds the output window."""
        if not self.coeffs:
            raise ZeroSeries("cannot invert a series that is zero to known order")
        if nterms is None:
            if self.upto is None:
                if len(self.coeffs) == 1:
                    return LaurentSeries(
                        -self.minexp, (self.coeffs[0].inverse(),), None
                    )
                raise ValueError("exact multi-term series needs explicit nterms")
            nterms = self.upto - self.minexp
        elif self.upto is not None:
            nterms = min(nterms, self.upto - self.minexp)
        a0_inv = self.coeffs[0].inverse()
        out = [a0_inv]
        for k in range(1, nterms):
            s = QI_ZERO
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                s = s + self.coeffs[j] * out[k - j]
            out.append(-a0_inv * s)
        return LaurentSeries(-self.minexp, out, -self.minexp + nterms)

    def __truediv__(self, other):
        if isinstance(other, (int, GaussianRational)):
            if isinstance(other, int):
                other = GaussianRational(other)
            return self.scale(other.inverse())
        return self * other.invert()

    def derivative(self) -> LaurentSeries:
        pairs = [
            (self.minexp + j - 1, (self.minexp + j) * cj)
            for j, cj in enumerate(self.coeffs)
        ]
        u = None if self.upto is None else self.upto - 1
        return LaurentSeries.from_pairs(pairs, u)

    def delta(self, kind: VariableKind) -> LaurentSeries:
        """x d/dx through the variable change: -chi^2 d/dchi or i*theta*chi d/dchi."""
        if kind.name == "complicated":
            pairs = [
                (self.minexp + j + 1, -(self.minexp + j) * cj)
                for j, cj in enumerate(self.coeffs)
            ]
            u = None if self.upto is None else self.upto + 1
            return LaurentSeries.from_pairs(pairs, u)
        it = kind.itheta
        pairs = [
            (self.minexp + j, (self.minexp + j) * it * cj)
            for j, cj in enumerate(self.coeffs)
        ]
        return LaurentSeries.from_pairs(pairs, self.upto)

    def truncate(self, upto: int) -> LaurentSeries:
        u = upto if self.upto is None else min(self.upto, upto)
        return LaurentSeries(self.minexp, self.coeffs, u)

    # -- comparisons ------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.minexp == other.minexp
            and self.coeffs == other.coeffs
            and self.upto == other.upto
        )

    def __hash__(self):
        return hash((self.minexp, self.coeffs, self.upto))

    def agrees_with(self, other: LaurentSeries) -> bool:
        """Equality of all coefficients on the common known window."""
        u = min(_fin(self.upto), _fin(other.upto))
        if u == _INF:
            u = 0
            if self.coeffs:
                u = max(u, self.minexp + len(self.coeffs))
            if other.coeffs:
                u = max(u, other.minexp + len(other.coeffs))
        lo = min(self.order_lower_bound(), other.order_lower_bound())
        if lo >= u:
            return True
        for e in range(int(lo), int(u)):
            if self.coeff(e) != other.coeff(e):
                return False
        return True

    def __str__(self):
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join(
                f"({c})*chi^{self.minexp + j}"
                for j, c in enumerate(self.coeffs)
                if c
            )
        tail = "" if self.upto is None else f" + O(chi^{self.upto})"
        return body + tail

    __repr__ = __str__
