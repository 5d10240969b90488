"""The polynomialized Painleve VI sum, its leading-term families, and checks.

The sixth Painleve equation multiplied by x^2 (x-1)^2 y (y-1) (y-x) is an
algebraic differential sum in (y, delta y, delta^2 y); the complicated and
exotic solution families start from a rational-in-chi leading term phi0.
The truncation consistency check certifies, in exact rational-function
arithmetic, that phi0 annihilates the near-zero truncated sum.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diffsum import DiffSum
from .errors import ConstraintViolation, TruncationResidualNonzero, UnsupportedExtension
from .graded import GradedSeries
from .laurent import COMPLICATED, LaurentSeries, VariableKind, exotic
from .polygon import truncate_for_direction
from .polys import Poly
from .ratfunc import RationalFunction
from .scalars import QI, QI_I, QI_ONE, QI_ZERO, GaussianRational, Rat, rat_sqrt

FAMILY_KINDS = (
    "complicated-generic",
    "complicated-equal",
    "exotic-generic",
    "B0",
    "B1",
    "B2",
    "B6",
    "B7",
)


@dataclass(frozen=True)
class PVIParams:
    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational

    @classmethod
    def of(cls, a, b, c, d) -> PVIParams:
        conv = lambda v: v if isinstance(v, GaussianRational) else QI(v)
        return cls(conv(a), conv(b), conv(c), conv(d))


@dataclass(frozen=True)
class FamilySpec:
    """A solution family: the variable change plus parameter constraints."""

    name: str
    theta: object = None  # rational, exotic kinds only

    def __post_init__(self):
        if self.name not in FAMILY_KINDS:
            raise ConstraintViolation(f"unknown family {self.name!r}")
        if self.is_exotic():
            if self.theta is None or not Rat(self.theta):
                raise ConstraintViolation("exotic family needs a nonzero rational theta")
            object.__setattr__(self, "theta", Rat(self.theta))
        elif self.theta is not None:
            raise ConstraintViolation("complicated families take no theta")

    def is_exotic(self) -> bool:
        return not self.name.startswith("complicated")

    def variable_kind(self) -> VariableKind:
        return exotic(self.theta) if self.is_exotic() else COMPLICATED

    # -- exotic denominator data ------------------------------------------------
    def AB(self, p: PVIParams) -> tuple[GaussianRational, GaussianRational]:
        """Denominator coefficients of the exotic leading term."""
        t2 = QI(self.theta * self.theta)
        amc = p.a - p.c
        A = t2 * t2 + 4 * (p.a + p.c) * t2 + 4 * amc * amc
        B = 2 * t2 - 4 * amc
        return A, B

    def derived_c1(self, p: PVIParams) -> GaussianRational:
        """The family constant fixed by theta: c1 = 2(c-a) + theta^2."""
        return 2 * (p.c - p.a) + QI(self.theta * self.theta)

    def validate(self, p: PVIParams) -> None:
        """Raise ConstraintViolation when the family preconditions fail."""
        name = self.name
        if name == "complicated-generic":
            if p.a == p.c or p.a.is_zero() or p.c.is_zero():
                raise ConstraintViolation("complicated-generic needs a != c, a,c != 0")
            return
        if name == "complicated-equal":
            if p.a != p.c or p.a.is_zero():
                raise ConstraintViolation("complicated-equal needs a = c != 0")
            return
        if name == "exotic-generic":
            return
        if name == "B0":
            A, _ = self.AB(p)
            if p.a.is_zero():
                raise ConstraintViolation("B0 needs a != 0")
            if A.is_zero():
                raise ConstraintViolation("B0 needs a nondegenerate denominator")
            return
        if name in ("B1", "B2"):
            if self._b12_sigma_tau(p) is None:
                raise ConstraintViolation(
                    f"{name} needs a = -s^2/2, c = -t^2/2 with rational s, t and "
                    f"theta = {'t - s' if name == 'B1' else 't + s'}"
                )
            return
        if name == "B6":
            t2 = Rat(self.theta * self.theta)
            if not p.c.is_zero() or p.a != QI(-t2 / 2):
                raise ConstraintViolation("B6 needs c = 0 and a = -theta^2/2")
            return
        if name == "B7":
            if not p.a.is_zero():
                raise ConstraintViolation("B7 needs a = 0")
            if (QI(self.theta * self.theta) + 2 * p.c).is_zero():
                raise ConstraintViolation("B7 needs theta^2 + 2c != 0")
            return
        raise AssertionError(name)

    def _b12_sigma_tau(self, p: PVIParams):
        """Rational (sigma, tau) with a=-sigma^2/2, c=-tau^2/2 matching theta."""
        if p.a.im or p.c.im or p.a.is_zero() or p.c.is_zero() or p.a == p.c:
            return None
        s0 = rat_sqrt(-2 * p.a.re)
        t0 = rat_sqrt(-2 * p.c.re)
        if s0 is None or t0 is None or not s0 or not t0:
            return None
        for s in (s0, -s0):
            for t in (t0, -t0):
                combo = t - s if self.name == "B1" else t + s
                if combo == self.theta:
                    return s, t
        return None


def _c(kind: VariableKind, scalar) -> DiffSum:
    return DiffSum.constant(kind, scalar)


def pvi_diffsum(p: PVIParams, kind: VariableKind) -> DiffSum:
    """The polynomial Painleve VI sum in delta form.

    First and second derivatives enter through delta: the printed
    y' and y'' factors cancel the x^2 and x^1 prefactors exactly, so every
    x-grade of the result is a non-negative integer.
    """
    a, b, c, d = p.a, p.b, p.c, p.d
    X = DiffSum.x(kind)
    Y = DiffSum.y(kind)
    D1 = DiffSum.delta_y(kind)
    D2 = DiffSum.delta2_y(kind)
    xm1sq = (X - 1) ** 2
    s = 2 * (xm1sq * Y * (Y - 1) * (Y - X) * (D2 - D1))
    s = s - xm1sq * (3 * (Y**2) - 2 * (X * Y) - 2 * Y + X) * (D1**2)
    s = s + 2 * (Y * (X - 1) * (Y - 1) * (2 * (X * Y) - X**2 - Y) * D1)
    s = s - (2 * a) * Y**6
    s = s + (4 * a) * ((X + 1) * Y**5)
    q4 = (a + d) * X**2 + (4 * a + b + c - d) * X + _c(kind, a - c)
    s = s - 2 * (q4 * Y**4)
    q3 = (a + b + c + d) * X + _c(kind, a + b - c - d)
    s = s + 4 * (X * q3 * Y**3)
    q2 = (b + c) * X**3 + (a + 4 * b - c + d) * X**2 + (b - d) * X
    s = s - 2 * (q2 * Y**2)
    s = s + (4 * b) * (X**2 * (X + 1) * Y)
    s = s - (2 * b) * X**3
    return s


def phi0_build(f: FamilySpec, p: PVIParams) -> RationalFunction:
    """The rational-in-chi leading term of the family."""
    f.validate(p)
    if f.name == "complicated-generic":
        cma = p.c - p.a
        num = Poly((QI_ZERO, QI_ZERO, 2 * cma))
        den = Poly((cma * cma, QI_ZERO, -2 * p.a))
        return RationalFunction(num, den)
    if f.name == "complicated-equal":
        root = (2 * p.a).sqrt()
        if root is None:
            raise UnsupportedExtension(
                "complicated-equal leading term needs 2a to be a square in Q(i)"
            )
        return RationalFunction(Poly((QI_ZERO, root.inverse())), Poly((QI_ONE,)))
    A, B = f.AB(p)
    t2 = QI(f.theta * f.theta)
    return RationalFunction(Poly((QI_ZERO, 4 * t2)), Poly((QI_ONE, B, A)))


def phi0_graded(f: FamilySpec, p: PVIParams) -> GradedSeries:
    """phi0 as a grade-0 graded series with exact rational coefficient."""
    return GradedSeries.single(f.variable_kind(), 0, phi0_build(f, p))


def phi0_series(f: FamilySpec, p: PVIParams, nterms: int) -> LaurentSeries:
    return phi0_build(f, p).expand_at_zero(nterms)


def check_truncated_solution(f: FamilySpec, p: PVIParams) -> dict:
    """Certify that phi0 annihilates the near-zero truncation exactly.

    The truncation of the full sum for the direction (1, 0) is evaluated on
    phi0 in rational-function arithmetic; all grades must vanish identically.
    Raises TruncationResidualNonzero otherwise.
    """
    f.validate(p)
    kind = f.variable_kind()
    g = pvi_diffsum(p, kind)
    cmin, ghat = truncate_for_direction(g, Rat(0))
    y = phi0_graded(f, p)
    res = ghat.evaluate(y)
    for k in sorted(res.terms):
        rf = res.terms[k]
        if not rf.is_zero():
            raise TruncationResidualNonzero(
                f"grade {k} residual of the truncated sum is nonzero", offender=rf
            )
    return {
        "family": f.name,
        "theta": None if f.theta is None else str(f.theta),
        "minimum": str(cmin),
        "truncation_monomials": len(ghat.monomials),
        "residual_zero": True,
    }


def grade0_linear_operator(f: FamilySpec, p: PVIParams):
    """Operator-derived coefficients (of u2, u1, u0) of the linearized sum.

    Extracted from the substitution y = phi0 + x*u at x-grade 1 (the leading
    grade of the u-linear part), as exact rational functions of chi.
    """
    kind = f.variable_kind()
    g = pvi_diffsum(p, kind)
    sub = g.substitute_affine(phi0_graded(f, p))
    return sub.grade0_linear()


def linearized_reference_forms(f: FamilySpec, p: PVIParams):
    """Closed forms of the same three coefficients, for cross-checking.

    Written in terms of phi0 and its first and second Euler derivatives
    F1 = delta phi0 and F2 = delta^2 phi0 - delta phi0.
    """
    kind = f.variable_kind()
    F0 = phi0_build(f, p)
    F1 = F0.delta(kind)
    F2 = F1.delta(kind) - F1
    a, c = p.a, p.c
    L2 = 2 * F0 * F0 * (F0 - 1)
    L1 = 2 * F0 * (3 * F0 * F0 - 3 * F0 * F1 - 3 * F0 + 2 * F1)
    L0 = -2 * (
        6 * a * F0**5
        - 10 * a * F0**4
        + 4 * a * F0**3
        - 4 * c * F0**3
        - F0**3
        - 3 * F0 * F0 * F2
        + 3 * F0 * F1 * F1
        + F0 * F0
        + 2 * F0 * F2
        - F1 * F1
    )
    return (L2, L1, L0)


def exotic_leading_derivative_forms(f: FamilySpec, p: PVIParams):
    """Closed rational forms of delta phi0 and x^2 phi0'' for exotic families."""
    if not f.is_exotic():
        raise ConstraintViolation("exotic families only")
    A, B = f.AB(p)
    th = QI(f.theta)
    i = QI_I
    t3 = th * th * th
    W = Poly((QI_ONE, B, A))
    dnum = Poly((QI_ZERO, -4 * i * t3)) * Poly((-QI_ONE, QI_ZERO, A))
    dphi = RationalFunction(dnum, W * W)
    ddnum = Poly(
        (
            -i - th,
            -B * (i - th),
            6 * A * th,
            A * B * (i + th),
            A * A * (i - th),
        )
    )
    ddphi = RationalFunction(Poly((QI_ZERO, 4 * t3)) * ddnum, W * W * W)
    return dphi, ddphi


def first_order_rhs_reference(f: FamilySpec, p: PVIParams) -> RationalFunction:
    """The explicit first-order inhomogeneity as a polynomial in phi0 and
    its Euler derivatives, evaluated on the exotic closed forms."""
    kind = f.variable_kind()
    F0 = phi0_build(f, p)
    F1 = F0.delta(kind)
    F2 = F1.delta(kind) - F1
    a, b, c, d = p.a, p.b, p.c, p.d
    return (
        4 * a * F0**5
        - 2 * (4 * a + b + c - d) * F0**4
        + 4 * (a + b - c - d) * F0**3
        - 6 * F0**3 * F1
        - 4 * F0**3 * F2
        + 6 * F0**2 * F1**2
        - 2 * (b - d) * F0**2
        + 6 * F0**2 * F1
        + 2 * F0**2 * F2
        - 2 * F0 * F1**2
        + 2 * F0 * F2
        - F1 * F1
    )


def closed_form_correspondence(f: FamilySpec, p: PVIParams) -> dict:
    """Map a basic-family closed form onto the general rational leading term.

    The closed forms live in the reciprocal scaled variable: phi_closed(chi)
    equals sign * phi0(lam / chi) as exact rational functions.  Returns the
    correspondence data with the verified flag.
    """
    f.validate(p)
    if f.name not in ("B1", "B2", "B6", "B7"):
        raise ConstraintViolation("closed forms are recorded for B1, B2, B6, B7")
    th = QI(f.theta)
    phi0 = phi0_build(f, p)
    one = QI_ONE
    if f.name in ("B1", "B2"):
        s, t = f._b12_sigma_tau(p)
        s, t = QI(s), QI(t)
        val = one - t / s if f.name == "B1" else one + t / s
        closed = RationalFunction(Poly((val,)), Poly((one, -one)))
        lam = (one / (4 * s * th)) if f.name == "B1" else (-one / (4 * s * th))
        sign = 1
    elif f.name == "B6":
        closed = RationalFunction(Poly((one,)), Poly((one, one)))
        lam = one / (4 * th * th)
        sign = 1
    else:  # B7: the trigonometric form carries the opposite sign
        D = QI(f.theta * f.theta) + 2 * p.c
        closed = RationalFunction(
            Poly((QI_ZERO, 4 * th * th / D)), Poly((one, -2 * one, one))
        )
        lam = -one / D
        sign = -1
    mapped = phi0.compose_reciprocal_scaled(lam)
    if sign == -1:
        mapped = -mapped
    return {
        "family": f.name,
        "closed_form": closed,
        "lam": lam,
        "sign": sign,
        "matches": closed == mapped,
    }
