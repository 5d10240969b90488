"""Rational functions over Q(i) in the series variable chi.

Canonical form (monic denominator, coprime numerator) makes equality a
representation check.  Expansions at 0, at infinity, and at finite points
return LaurentSeries; reconstruction from a truncated series lives here too.
"""
from __future__ import annotations

from .errors import DivisionByZero, InsufficientTerms
from .laurent import LaurentSeries, VariableKind
from .polys import Poly, poly_gcd
from .scalars import QI_ONE, QI_ZERO, GaussianRational, QI_I


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num = Poly()
            self.den = Poly((QI_ONE,))
            return
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead_inv = den.leading().inverse()
        self.num = num.scale(lead_inv)
        self.den = den.scale(lead_inv)

    # -- constructors -----------------------------------------------------------
    @classmethod
    def const(cls, scalar) -> RationalFunction:
        if isinstance(scalar, int):
            scalar = GaussianRational(scalar)
        return cls(Poly.const(scalar), Poly((QI_ONE,)))

    @classmethod
    def from_poly(cls, p: Poly) -> RationalFunction:
        return cls(p, Poly((QI_ONE,)))

    @classmethod
    def x_power(cls, n: int) -> RationalFunction:
        if n >= 0:
            return cls(Poly.x_power(n), Poly((QI_ONE,)))
        return cls(Poly((QI_ONE,)), Poly.x_power(-n))

    @classmethod
    def from_laurent_polynomial(cls, s: LaurentSeries) -> RationalFunction:
        if not s.is_exact():
            raise ValueError("series is not exact")
        num = Poly(s.coeffs)
        if s.minexp >= 0:
            return cls(num.shift_up(s.minexp), Poly((QI_ONE,)))
        return cls(num, Poly.x_power(-s.minexp))

    # -- queries ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def order_at_zero(self) -> int:
        """Valuation at chi = 0 (raises on the zero function)."""
        return self.num.valuation() - self.den.valuation()

    def degree_pair(self) -> tuple[int, int]:
        return (self.num.degree(), self.den.degree())

    # -- field arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        out = RationalFunction.const(0)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return (RationalFunction.const(1) / self) ** (-n)
        out = RationalFunction.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> RationalFunction:
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def delta(self, kind: VariableKind) -> RationalFunction:
        """x d/dx through the variable change, staying rational in chi."""
        d = self.derivative()
        if kind.name == "complicated":
            return RationalFunction(
                -(d.num.shift_up(2)), d.den
            )
        return RationalFunction(d.num.shift_up(1).scale(kind.itheta), d.den)

    def eval_at(self, point):
        dv = self.den.eval(point)
        if not dv:
            raise DivisionByZero("pole at the evaluation point")
        return self.num.eval(point) * _inverse(dv)

    # -- expansion ---------------------------------------------------------------
    def expand_at_zero(self, nterms: int) -> LaurentSeries:
        """Laurent expansion at chi = 0 with nterms known coefficients."""
        if self.num.is_zero():
            return LaurentSeries.zero(nterms)
        vn = self.num.valuation()
        vd = self.den.valuation()
        nser = LaurentSeries(0, self.num.c[vn:], None)
        dser = LaurentSeries(0, self.den.c[vd:], None)
        out = nser.truncate(nterms) * dser.invert(nterms)
        out = LaurentSeries(
            out.minexp + vn - vd,
            out.coeffs,
            None if out.upto is None else out.upto + vn - vd,
        )
        return out.truncate(vn - vd + nterms)

    def expand_at_infinity(self, nterms: int) -> LaurentSeries:
        """Expansion in t = 1/chi; the t^e coefficient multiplies chi^(-e)."""
        return self.reciprocal_substitution().expand_at_zero(nterms)

    def expand_at_point(self, point, nterms: int) -> LaurentSeries:
        """Expansion in zeta = chi - point, coefficients in the field of point."""
        num = self.num.taylor_shift(point)
        den = self.den.taylor_shift(point)
        vn = num.valuation() if not num.is_zero() else 0
        vd = den.valuation()
        if num.is_zero():
            return LaurentSeries.zero(nterms)
        nser = LaurentSeries(0, num.c[vn:], None)
        dser = LaurentSeries(0, den.c[vd:], None)
        out = nser.truncate(nterms) * dser.invert(nterms)
        out = LaurentSeries(
            out.minexp + vn - vd,
            out.coeffs,
            None if out.upto is None else out.upto + vn - vd,
        )
        return out.truncate(vn - vd + nterms)

    def reciprocal_substitution(self) -> RationalFunction:
        """r(1/t) as a rational function of t."""
        d = max(self.num.degree(), self.den.degree())
        rev_n = Poly(tuple(reversed(self.num.c))).shift_up(d - self.num.degree())
        rev_d = Poly(tuple(reversed(self.den.c))).shift_up(d - self.den.degree())
        return RationalFunction(rev_n, rev_d)

    def compose_reciprocal_scaled(self, lam) -> RationalFunction:
        """r(lam / chi) as a rational function of chi."""
        d = max(self.num.degree(), self.den.degree())

        def sub(p: Poly) -> Poly:
            out = [QI_ZERO] * (d + 1)
            lam_pow = QI_ONE
            for j, cj in enumerate(p.c):
                out[d - j] = cj * lam_pow
                lam_pow = lam_pow * lam
            return Poly(out)

        return RationalFunction(sub(self.num), sub(self.den))

    # -- comparisons ----------------------------------------------------------------
    def __eq__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == Poly((QI_ONE,)):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _coerce_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, GaussianRational)):
        return RationalFunction.const(x)
    if isinstance(x, Poly):
        return RationalFunction.from_poly(x)
    return NotImplemented


def _inverse(x):
    return x.inverse()


CHI = RationalFunction.x_power(1)


def nullspace_vector(rows: list[list[GaussianRational]], ncols: int):
    """One nonzero solution of rows . v = 0, or None if only the trivial one.

    Free variables are set to 0 except the last, set to 1 (deterministic).
    """
    m = [row[:] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][col]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][col].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    v = [QI_ZERO] * ncols
    v[free[-1]] = QI_ONE
    for row_idx, pc in enumerate(pivots):
        v[pc] = -m[row_idx][free[-1]]
    return v


def pade_reconstruct(f: LaurentSeries, max_deg: int):
    """Smallest rational function reproducing every known coefficient of f.

    Searches numerator/denominator degrees (p, q) by increasing p+q, ties by
    smaller q, both bounded by max_deg; the candidate is verified against the
    full known window before being returned.  Returns None when no rational
    function of the allowed degrees matches.
    """
    if f.is_exact():
        if not f.coeffs:
            return RationalFunction.const(0)
        cand = RationalFunction.from_laurent_polynomial(f)
        p, q = cand.degree_pair()
        if p <= max_deg and q <= max_deg:
            return cand
        return None
    known = f.upto - max(f.minexp, 0)
    if known < 2 * max_deg + 2:
        raise InsufficientTerms(
            f"{known} known coefficients beyond the principal part; "
            f"need {2 * max_deg + 2} for max_deg={max_deg}"
        )
    lo = f.order_lower_bound()
    if lo >= f.upto:
        return RationalFunction.const(0)
    lo = int(lo)
    for total in range(0, 2 * max_deg + 1):
        for q in range(0, min(total, max_deg) + 1):
            p = total - q
            if p > max_deg:
                continue
            cand = _try_pade(f, lo, p, q)
            if cand is not None:
                return cand
    return None


def _try_pade(f: LaurentSeries, lo: int, p: int, q: int):
    rows = []
    for e in range(lo, f.upto):
        if 0 <= e <= p:
            continue
        rows.append([f.coeff(e - j) if e - j >= lo else QI_ZERO for j in range(q + 1)])
    d = nullspace_vector(rows, q + 1) if rows else None
    if rows and d is None:
        return None
    if not rows:
        d = [QI_ONE] + [QI_ZERO] * q
    dpoly = Poly(d)
    if dpoly.is_zero():
        return None
    npoly_pairs = []
    for e in range(0, p + 1):
        s = QI_ZERO
        for j in range(q + 1):
            if e - j >= lo and (f.upto is None or e - j < f.upto):
                s = s + f.coeff(e - j) * d[j]
        npoly_pairs.append(s)
    npoly = Poly(npoly_pairs)
    if npoly.is_zero() and not f.is_zero_known():
        return None
    cand = RationalFunction(npoly, dpoly)
    nterms = f.upto - cand.order_at_zero() + 1
    if nterms <= 0 or not cand.expand_at_zero(nterms).agrees_with(f):
        return None
    return cand
