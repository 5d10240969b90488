"""Differential sums in the Euler derivation delta = x d/dx.

A differential sum is a finite set of monomials

    coeff(x, chi) * y^q20 * (delta y)^q21 * (delta^2 y)^q22

with graded-series coefficients.  First and second x-derivatives are
rewritten through delta at construction time (y' = delta y / x,
y'' = (delta^2 y - delta y) / x^2), which keeps the grading intact under
both variable changes.
"""
from __future__ import annotations

from .errors import NonIntegerGrade
from .graded import GradedSeries
from .laurent import LaurentSeries, VariableKind
from .ratfunc import RationalFunction
from .scalars import QI_ONE, GaussianRational, Rat


class DiffSum:
    """Monomials keyed by the exponent vector (q20, q21, q22)."""

    __slots__ = ("kind", "monomials")

    def __init__(self, kind: VariableKind, monomials: dict):
        self.kind = kind
        self.monomials = {
            q2: c for q2, c in monomials.items() if c.terms or c.known_x is not None
        }

    # -- constructors ------------------------------------------------------------
    @classmethod
    def zero(cls, kind: VariableKind) -> DiffSum:
        return cls(kind, {})

    @classmethod
    def from_graded(cls, coeff: GradedSeries) -> DiffSum:
        return cls(coeff.kind, {(0, 0, 0): coeff})

    @classmethod
    def constant(cls, kind: VariableKind, scalar) -> DiffSum:
        g = GradedSeries.single(kind, 0, LaurentSeries.constant(scalar))
        return cls(kind, {(0, 0, 0): g})

    @classmethod
    def x(cls, kind: VariableKind, n: int = 1) -> DiffSum:
        g = GradedSeries.single(kind, n, LaurentSeries.constant(QI_ONE))
        return cls(kind, {(0, 0, 0): g})

    @classmethod
    def y(cls, kind: VariableKind) -> DiffSum:
        g = GradedSeries.single(kind, 0, LaurentSeries.constant(QI_ONE))
        return cls(kind, {(1, 0, 0): g})

    @classmethod
    def delta_y(cls, kind: VariableKind) -> DiffSum:
        g = GradedSeries.single(kind, 0, LaurentSeries.constant(QI_ONE))
        return cls(kind, {(0, 1, 0): g})

    @classmethod
    def delta2_y(cls, kind: VariableKind) -> DiffSum:
        g = GradedSeries.single(kind, 0, LaurentSeries.constant(QI_ONE))
        return cls(kind, {(0, 0, 1): g})

    # -- ring operations -----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = DiffSum.constant(self.kind, GaussianRational(other))
            if self._uses_rational_ring():
                other = other.to_rational()
        out = dict(self.monomials)
        for q2, c in other.monomials.items():
            out[q2] = out[q2] + c if q2 in out else c
        return DiffSum(self.kind, out)

    __radd__ = __add__

    def __neg__(self):
        return DiffSum(self.kind, {q2: -c for q2, c in self.monomials.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = DiffSum.constant(self.kind, GaussianRational(other))
            if self._uses_rational_ring():
                other = other.to_rational()
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, DiffSum):
            out: dict = {}
            for q2a, ca in self.monomials.items():
                for q2b, cb in other.monomials.items():
                    q2 = (q2a[0] + q2b[0], q2a[1] + q2b[1], q2a[2] + q2b[2])
                    p = ca * cb
                    out[q2] = out[q2] + p if q2 in out else p
            return DiffSum(self.kind, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, scalar) -> DiffSum:
        if isinstance(scalar, int):
            scalar = GaussianRational(scalar)
        return DiffSum(
            self.kind, {q2: c.scale(scalar) for q2, c in self.monomials.items()}
        )

    def __pow__(self, n: int) -> DiffSum:
        if n == 0:
            one = DiffSum.constant(self.kind, QI_ONE)
            return one.to_rational() if self._uses_rational_ring() else one
        out = None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            base = base * base
            n >>= 1
        return out

    def shift_x(self, n: int) -> DiffSum:
        return DiffSum(
            self.kind, {q2: c.shift_x(n) for q2, c in self.monomials.items()}
        )

    def to_rational(self) -> DiffSum:
        """Convert exact Laurent-polynomial coefficients to rational functions."""
        return DiffSum(
            self.kind,
            {
                q2: c.map_coeffs(_to_rational)
                for q2, c in self.monomials.items()
            },
        )

    def _uses_rational_ring(self) -> bool:
        for coeff in self.monomials.values():
            for c in coeff.terms.values():
                return isinstance(c, RationalFunction)
        return False

    # -- semantics ----------------------------------------------------------------
    def support(self) -> set:
        """Exponent points (x-grade, q20+q21+q22), one per nonvanishing term."""
        pts = set()
        for q2, coeff in self.monomials.items():
            tot = q2[0] + q2[1] + q2[2]
            for k, c in coeff.terms.items():
                nonzero = (
                    not c.is_zero()
                    if isinstance(c, RationalFunction)
                    else not c.is_zero_known()
                )
                if nonzero:
                    pts.add((Rat(k), tot))
        return pts

    def evaluate(self, y: GradedSeries, x_upto: int | None = None) -> GradedSeries:
        """Substitute y, delta y, delta^2 y into every monomial."""
        rational = any(
            isinstance(c, RationalFunction) for c in y.terms.values()
        )
        dy = y.delta()
        d2y = dy.delta()
        n0 = max((q2[0] for q2 in self.monomials), default=0)
        n1 = max((q2[1] for q2 in self.monomials), default=0)
        n2 = max((q2[2] for q2 in self.monomials), default=0)
        pow0 = _power_table(y, n0, x_upto)
        pow1 = _power_table(dy, n1, x_upto)
        pow2 = _power_table(d2y, n2, x_upto)
        total = GradedSeries.zero(self.kind, known_x=None)
        for q2, coeff in self.monomials.items():
            if rational:
                coeff = coeff.map_coeffs(_to_rational)
            term = coeff.mul(pow0[q2[0]], x_upto) if q2[0] else coeff
            if q2[1]:
                term = term.mul(pow1[q2[1]], x_upto)
            if q2[2]:
                term = term.mul(pow2[q2[2]], x_upto)
            if x_upto is not None:
                term = term.truncate_x(x_upto + 1)
            total = total + term
        return total

    def substitute_affine(self, phi0: GradedSeries) -> SubstitutedSystem:
        """Substitute y = phi0 + x*u; returns the system grouped in powers of u.

        phi0 must be concentrated at x-grade 0.
        """
        if any(k != 0 for k in phi0.terms):
            raise ValueError("phi0 must be a pure grade-0 series")
        kind = self.kind
        rational = any(isinstance(c, RationalFunction) for c in phi0.terms.values())
        u0 = DiffSum.y(kind)
        u1 = DiffSum.delta_y(kind)
        u2 = DiffSum.delta2_y(kind)
        x1 = DiffSum.x(kind, 1)
        base = self
        if rational:
            u0, u1, u2, x1 = (t.to_rational() for t in (u0, u1, u2, x1))
            base = self.to_rational()
        dphi = phi0.delta()
        d2phi = dphi.delta()
        # delta(x u) = x (u + delta u); delta^2(x u) = x (u + 2 delta u + delta^2 u)
        w = (
            DiffSum.from_graded(phi0) + x1 * u0,
            DiffSum.from_graded(dphi) + x1 * (u0 + u1),
            DiffSum.from_graded(d2phi) + x1 * (u0 + 2 * u1 + u2),
        )
        out = DiffSum.zero(kind)
        for q2, coeff in base.monomials.items():
            term = DiffSum.from_graded(coeff)
            for j in range(3):
                if q2[j]:
                    term = term * (w[j] ** q2[j])
            out = out + term
        return SubstitutedSystem(out)

    def power_transform(self, rho0) -> DiffSum:
        """Substitute y = x^rho0 * v, regrading every monomial.

        Raises NonIntegerGrade when a monomial's grade shift q2*rho0 is not
        an integer.
        """
        rho0 = Rat(rho0)
        kind = self.kind
        v0 = DiffSum.y(kind)
        v1 = DiffSum.delta_y(kind)
        v2 = DiffSum.delta2_y(kind)
        if self._uses_rational_ring():
            v0, v1, v2 = (t.to_rational() for t in (v0, v1, v2))
        rho = GaussianRational(rho0)
        # delta(x^r v) = x^r (r v + delta v);  delta^2(x^r v) = x^r (r^2 v + 2 r delta v + delta^2 v)
        w = (
            v0,
            v0.scale(rho) + v1,
            v0.scale(rho * rho) + v1.scale(2 * rho) + v2,
        )
        out = DiffSum.zero(kind)
        for q2, coeff in self.monomials.items():
            tot = q2[0] + q2[1] + q2[2]
            shift = rho0 * tot
            if shift.denominator != 1:
                raise NonIntegerGrade(
                    f"grade shift {shift} for monomial {q2} is not an integer"
                )
            term = DiffSum.from_graded(coeff.shift_x(int(shift)))
            for j in range(3):
                if q2[j]:
                    term = term * (w[j] ** q2[j])
            out = out + term
        return out

    def factor_out_x(self) -> tuple[int, DiffSum]:
        """Divide by the largest common power of x; returns (c, normalized sum)."""
        grades = [
            k for coeff in self.monomials.values() for k in coeff.terms
        ]
        if not grades:
            return 0, self
        c = min(grades)
        return c, self.shift_x(-c)

    def __str__(self):
        parts = []
        for q2 in sorted(self.monomials):
            parts.append(f"[{self.monomials[q2]}] * y^{q2[0]} dy^{q2[1]} d2y^{q2[2]}")
        return "\n+ ".join(parts) if parts else "0"

    __repr__ = __str__


class SubstitutedSystem:
    """The result of y = phi0 + x*u, grouped by powers of (u, du, d2u).

    ``diffsum`` is the full substituted sum; ``u_free`` is its u-independent
    part; ``grade0_linear`` exposes the three grade-0 coefficients of the
    u-linear part in the (u, x u', x^2 u'') frame.
    """

    __slots__ = ("diffsum",)

    def __init__(self, diffsum: DiffSum):
        self.diffsum = diffsum

    def u_free(self) -> GradedSeries:
        c = self.diffsum.monomials.get((0, 0, 0))
        return c if c is not None else GradedSeries.zero(self.diffsum.kind)

    def linear_delta_coeffs(self):
        """Graded coefficients of u, delta u, delta^2 u in the linear part."""
        kind = self.diffsum.kind
        z = GradedSeries.zero(kind)
        return (
            self.diffsum.monomials.get((1, 0, 0), z),
            self.diffsum.monomials.get((0, 1, 0), z),
            self.diffsum.monomials.get((0, 0, 1), z),
        )

    def grade0_linear(self):
        """Coefficients (of u2, u1, u0) with u_j = x^j u^(j), at leading x-grade.

        The linear-in-u part of the substituted sum carries an overall factor
        x; its grade-1 coefficients are the leading (order-zero) operator.
        Conversion from the delta frame: u2's coefficient is that of delta^2 u,
        u1's is (coeff of delta u) + (coeff of delta^2 u), u0's is that of u.
        """
        c0, c1, c2 = (g.grade(1) for g in self.linear_delta_coeffs())
        kind = self.diffsum.kind
        zero = _ring_zero(c0, c1, c2, kind)
        a = c2 if c2 is not None else zero
        b = c1 if c1 is not None else zero
        c = c0 if c0 is not None else zero
        return (a, a + b, c)


def _ring_zero(*candidates_and_kind):
    *cands, kind = candidates_and_kind
    for c in cands:
        if c is not None:
            if isinstance(c, RationalFunction):
                return RationalFunction.const(0)
            return LaurentSeries.zero()
    return LaurentSeries.zero()


def _power_table(g: GradedSeries, n: int, x_upto):
    table = [None, g]
    for j in range(2, n + 1):
        table.append(table[-1].mul(g, x_upto))
    return table


def _to_rational(c):
    if isinstance(c, RationalFunction):
        return c
    return RationalFunction.from_laurent_polynomial(c)


def evaluate(g: DiffSum, y: GradedSeries, x_upto: int | None = None) -> GradedSeries:
    return g.evaluate(y, x_upto)


def substitute_affine(g: DiffSum, phi0: GradedSeries) -> SubstitutedSystem:
    return g.substitute_affine(phi0)


def support(g: DiffSum) -> set:
    return g.support()


def power_transform(g: DiffSum, rho0) -> DiffSum:
    return g.power_transform(rho0)
