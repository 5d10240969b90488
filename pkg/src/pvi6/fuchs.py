"""Singular-point analysis of the per-grade linear operators.

Operators are brought to polynomial coefficients; singular points are the
roots of the leading coefficient (grouped by square-free factor, living in
Q(i) or a quadratic extension of it) together with infinity.  Fuchsianity is
decided by exact divisibility, never by root extraction; indicial exponents
and log flags come from the exact local recurrence.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    HigherLogUnsupported,
    NotASingularPoint,
    NotFuchsian,
    UnsupportedExtension,
)
from .extension import AlgebraicNumber, quadratic_roots
from .graded import GradedSeries
from .laurent import LaurentSeries
from .polys import Poly, poly_gcd, squarefree_decomposition
from .ratfunc import RationalFunction
from .recursion import CoefficientEquation, ExpansionState, build_linear_operator_k
from .scalars import QI_ONE, QI_ZERO, GaussianRational

INFINITY = "inf"


@dataclass
class LinearOperator:
    """c2 y'' + c1 y' + c0 y + rhs = 0 with polynomial coefficients."""

    c2: Poly
    c1: Poly
    c0: Poly
    rhs: object = None  # Poly when exactly known, LaurentSeries otherwise

    def coeff_triple(self):
        return (self.c2, self.c1, self.c0)


@dataclass
class SingularPointReport:
    point: object  # GaussianRational, AlgebraicNumber, or INFINITY
    multiplicity: int
    fuchsian: bool | None = None
    exponents: tuple | None = None
    log_flag: bool | None = None
    particular_exponent: object = None
    particular_log: bool = False
    degenerate: bool = False

    def branches(self) -> bool:
        """True when a homogeneous solution is multivalued at the point."""
        if self.log_flag:
            return True
        if self.exponents is None:
            return False
        return not all(_is_rational_integer(e) for e in self.exponents)


def _is_rational_integer(e) -> bool:
    if isinstance(e, AlgebraicNumber):
        if not e.in_base_field():
            return False
        e = e.demote()
    if isinstance(e, GaussianRational):
        return (not e.im) and e.re.denominator == 1
    return False


def _laurent_poly_to_poly(s: LaurentSeries) -> tuple[Poly, int]:
    """(polynomial, valuation shift) for an exact Laurent polynomial."""
    if not s.is_exact():
        raise ValueError("operator coefficient is not exactly known")
    if not s.coeffs:
        return Poly(), 0
    if s.minexp >= 0:
        return Poly((QI_ZERO,) * s.minexp + tuple(s.coeffs)), 0
    return Poly(s.coeffs), s.minexp


def normalize_operator(eqn: CoefficientEquation, exact_rhs=None) -> LinearOperator:
    """Polynomial form of a coefficient equation, common factors removed.

    The equation's normalized coefficients are exact Laurent polynomials; a
    residual common chi-power (possible for degenerate families) is cleared,
    and a common polynomial gcd of the three coefficients is divided out
    together with the right side when that division is exact.
    """
    trip = []
    shifts = []
    for s in (eqn.op_d2, eqn.op_d1, eqn.op_d0):
        p, sh = _laurent_poly_to_poly(s)
        trip.append(p)
        shifts.append(sh)
    lift = -min(shifts)
    if lift:
        trip = [p.shift_up(lift + sh) for p, sh in zip(trip, shifts)]
    rhs = exact_rhs if exact_rhs is not None else eqn.rhs_normalized
    if lift:
        rhs = rhs.shift_up(lift) if isinstance(rhs, Poly) else rhs.shift(lift)
    g = poly_gcd(poly_gcd(trip[0], trip[1]), trip[2])
    if g.degree() > 0:
        divisible = True
        if isinstance(rhs, Poly):
            q, r = rhs.divmod(g)
            divisible = r.is_zero()
        if divisible:
            trip = [p.exact_div(g) for p in trip]
            if isinstance(rhs, Poly):
                rhs = rhs // g
    return LinearOperator(trip[0], trip[1], trip[2], rhs)


def exact_rhs_rational(state: ExpansionState, k: int) -> RationalFunction:
    """The grade-k inhomogeneity recomputed in rational-function arithmetic.

    Needs rational forms of the previous coefficients; grade 1 only needs
    the leading term.
    """
    terms = {0: state.phi0_rational}
    for j in range(1, k):
        cert = state.rational_certificates.get(j)
        if cert is None:
            raise ValueError(f"grade {j} has no rational certificate yet")
        terms[j] = cert
    s = GradedSeries(state.kind, terms, k + 1)
    res = state.full_sum.evaluate(s, x_upto=k)
    rhs = res.grade(k)
    return rhs if rhs is not None else RationalFunction.const(0)


def normalized_equation(state: ExpansionState, k: int) -> LinearOperator:
    """Polynomial operator with exact polynomial right side where possible."""
    eqn = build_linear_operator_k(state, k)
    exact = None
    try:
        rhs_rat = state.normalizer * exact_rhs_rational(state, k)
        if rhs_rat.den == Poly((QI_ONE,)):
            exact = rhs_rat.num
        elif rhs_rat.den.valuation() == rhs_rat.den.degree():
            exact = None  # a chi-power pole: keep the series form
    except ValueError:
        exact = None
    if exact is None:
        from .recursion import coefficient_equation

        full = coefficient_equation(state, k)
        return normalize_operator(full)
    return normalize_operator(eqn, exact_rhs=exact)


def operator_support(op: LinearOperator, include_rhs: bool = True) -> set:
    """Support points of the operator read as a differential sum in chi.

    chi^e y'' contributes (e-2, 1), chi^e y' contributes (e-1, 1), chi^e y
    contributes (e, 1); right-side monomials contribute (e, 0).
    """
    pts = set()
    for e, v in enumerate(op.c2.c):
        if v:
            pts.add((e - 2, 1))
    for e, v in enumerate(op.c1.c):
        if v:
            pts.add((e - 1, 1))
    for e, v in enumerate(op.c0.c):
        if v:
            pts.add((e, 1))
    if include_rhs and op.rhs is not None:
        if isinstance(op.rhs, Poly):
            for e, v in enumerate(op.rhs.c):
                if v:
                    pts.add((e, 0))
        else:
            for e, v in op.rhs.known_pairs():
                pts.add((e, 0))
    return pts


def shift_operator(op: LinearOperator, point) -> LinearOperator:
    """The operator in the local variable zeta = chi - point."""
    rhs = op.rhs
    if isinstance(rhs, Poly):
        rhs = rhs.taylor_shift(point)
    return LinearOperator(
        op.c2.taylor_shift(point),
        op.c1.taylor_shift(point),
        op.c0.taylor_shift(point),
        rhs,
    )


def reciprocal_operator(op: LinearOperator) -> LinearOperator:
    """The operator rewritten in t = 1/chi (for analysis at infinity).

    y(chi) = z(t) turns c2 y'' + c1 y' + c0 y into
    c2(1/t) (t^4 z'' + 2 t^3 z') - c1(1/t) t^2 z' + c0(1/t) z; everything is
    scaled by the power of t clearing denominators, then the common t power
    is dropped (which leaves the singular structure at t = 0 unchanged).
    """
    rhs_poly = op.rhs if isinstance(op.rhs, Poly) else None
    degs = [p.degree() for p in (op.c2, op.c1, op.c0) if not p.is_zero()]
    if rhs_poly is not None and not rhs_poly.is_zero():
        degs.append(rhs_poly.degree())
    n = max(degs)

    def rev(p: Poly) -> Poly:
        if p.is_zero():
            return Poly()
        return Poly(tuple(reversed(p.c))).shift_up(n - p.degree())

    c2r, c1r, c0r = rev(op.c2), rev(op.c1), rev(op.c0)
    new2 = c2r.shift_up(4)
    new1 = c2r.shift_up(3).scale(GaussianRational(2)) - c1r.shift_up(2)
    new0 = c0r
    rhs = rev(rhs_poly) if rhs_poly is not None else None
    v = [p.valuation() for p in (new2, new1, new0) if not p.is_zero()]
    if rhs is not None and not rhs.is_zero():
        v.append(rhs.valuation())
    drop = min(v) if v else 0
    if drop:
        new2, new1, new0 = (
            Poly(p.c[drop:]) if not p.is_zero() else p for p in (new2, new1, new0)
        )
        if rhs is not None and not rhs.is_zero():
            rhs = Poly(rhs.c[drop:])
    return LinearOperator(new2, new1, new0, rhs)


def singular_points(op: LinearOperator) -> list[SingularPointReport]:
    """Roots of the leading coefficient grouped by square-free factor, plus
    infinity.  Quadratic factors irreducible over Q(i) yield conjugate
    AlgebraicNumber points; factors of higher degree are out of scope."""
    if op.c2.is_zero():
        raise ValueError("not a second-order operator")
    reports = []
    val = op.c2.valuation()
    if val:
        reports.append(SingularPointReport(point=QI_ZERO, multiplicity=val))
    body = Poly(op.c2.c[val:])
    for factor, mult in squarefree_decomposition(body):
        deg = factor.degree()
        if deg == 1:
            root = -factor.coeff(0) / factor.coeff(1)
            reports.append(SingularPointReport(point=root, multiplicity=mult))
        elif deg == 2:
            r1, r2 = quadratic_roots(factor.coeff(2), factor.coeff(1), factor.coeff(0))
            reports.append(SingularPointReport(point=r1, multiplicity=mult))
            reports.append(SingularPointReport(point=r2, multiplicity=mult))
        elif deg > 2:
            raise UnsupportedExtension(
                f"irreducible factor of degree {deg} in the leading coefficient"
            )
    reports.append(SingularPointReport(point=INFINITY, multiplicity=0))
    return reports


def _local_valuation(p: Poly, point) -> int:
    """Order of vanishing of p at the point (len(p)+1 when p = 0)."""
    if p.is_zero():
        return 1 << 30
    if isinstance(point, GaussianRational) and point.is_zero():
        return p.valuation()
    return p.taylor_shift(point).valuation()


def fuchsian_at(op: LinearOperator, point) -> bool:
    """Fuchs criterion by exact divisibility / degree counts.

    At a finite singular point of multiplicity m the criterion is that the
    point vanishes to order >= m-1 in c1 and >= m-2 in c0; at infinity it is
    deg c1 <= deg c2 - 1 and deg c0 <= deg c2 - 2.
    """
    if point == INFINITY:
        n = op.c2.degree()
        d1 = op.c1.degree()
        d0 = op.c0.degree()
        return d1 <= n - 1 and d0 <= n - 2
    m = _local_valuation(op.c2, point)
    if m == 0:
        raise NotASingularPoint(f"{point} is not a root of the leading coefficient")
    v1 = _local_valuation(op.c1, point)
    v0 = _local_valuation(op.c0, point)
    return v1 >= m - 1 and v0 >= m - 2


def _indicial_roots(a2, a1, a0):
    """Roots of a2 l(l-1) + a1 l + a0, staying in the ambient field or one
    quadratic extension of Q(i)."""
    # l^2 a2 + l (a1 - a2) + a0
    A, B, C = a2, a1 - a2, a0
    if isinstance(A, AlgebraicNumber) or isinstance(B, AlgebraicNumber) or isinstance(
        C, AlgebraicNumber
    ):
        ext = None
        for v in (A, B, C):
            if isinstance(v, AlgebraicNumber):
                ext = v.ext
                break
        conv = lambda v: v if isinstance(v, AlgebraicNumber) else AlgebraicNumber(
            v, QI_ZERO, ext
        )
        A, B, C = conv(A), conv(B), conv(C)
        disc = B * B - 4 * A * C
        root = disc.sqrt()
        if root is None:
            raise UnsupportedExtension(
                "indicial roots leave the ambient quadratic extension"
            )
        two_a = 2 * A
        r1 = (-B + root) / two_a
        r2 = (-B - root) / two_a
        r1 = r1.demote() if r1.in_base_field() else r1
        r2 = r2.demote() if r2.in_base_field() else r2
        return r1, r2
    disc = B * B - 4 * A * C
    root = disc.sqrt()
    if root is not None:
        return ((-B + root) / (2 * A), (-B - root) / (2 * A))
    return quadratic_roots(A, B, C)


def _integer_gap(r1, r2):
    """r1 - r2 when it is a rational integer, else None."""
    try:
        diff = r1 - r2
    except Exception:
        return None
    if isinstance(diff, AlgebraicNumber):
        if not diff.in_base_field():
            return None
        diff = diff.demote()
    if isinstance(diff, GaussianRational):
        if diff.im or diff.re.denominator != 1:
            return None
        return int(diff.re)
    return None


def _shift_table_polys(c2: Poly, c1: Poly, c0: Poly):
    table = {}

    def put(p, which, off):
        for e, v in enumerate(p.c):
            if not v:
                continue
            s = e - off
            q, l, c = table.get(s, (QI_ZERO, QI_ZERO, QI_ZERO))
            if which == 2:
                q, l = q + v, l - v
            elif which == 1:
                l = l + v
            else:
                c = c + v
            table[s] = (q, l, c)

    put(c2, 2, 2)
    put(c1, 1, 1)
    put(c0, 0, 0)
    table = {s: t for s, t in table.items() if any(t)}
    s0 = min(table)
    return s0, table


def _head_eval(tpl, m):
    q, l, c = tpl
    return q * m * m + l * m + c


def _frobenius_obstruction(local: LinearOperator, lam_small, gap: int):
    """The coefficient blocking the smaller-exponent Frobenius series at the
    resonance; log appears in the second solution iff it is nonzero."""
    s0, table = _shift_table_polys(local.c2, local.c1, local.c0)
    shifts = sorted(table)
    beta = [QI_ONE + 0 * lam_small]  # one, in the field of lam_small
    for j in range(1, gap + 1):
        acc = beta[0] * QI_ZERO
        for s in shifts:
            if s == s0:
                continue
            l = j - (s - s0)
            if 0 <= l < len(beta):
                acc = acc + _head_eval(table[s], lam_small + l) * beta[l]
        div = _head_eval(table[s0], lam_small + j)
        if j == gap:
            return acc
        beta.append(-acc / div)
    return beta[0] * QI_ZERO  # gap == 0 never reaches here


def indicial_data(op: LinearOperator, point) -> SingularPointReport:
    """Indicial exponents and log flag at a Fuchsian singular point."""
    if point == INFINITY:
        if not fuchsian_at(op, INFINITY):
            raise NotFuchsian("operator is not Fuchsian at infinity")
        rep = indicial_data(reciprocal_operator(op), QI_ZERO)
        exps = tuple(-e for e in rep.exponents)
        return SingularPointReport(
            point=INFINITY,
            multiplicity=0,
            fuchsian=True,
            exponents=exps,
            log_flag=rep.log_flag,
            particular_exponent=None
            if rep.particular_exponent is None
            else -rep.particular_exponent,
            particular_log=rep.particular_log,
        )
    if not fuchsian_at(op, point):
        raise NotFuchsian(f"operator is not Fuchsian at {point}")
    local = op if _is_zero_point(point) else shift_operator(op, point)
    m = local.c2.valuation()
    if m == 0:
        raise NotASingularPoint(f"{point} is an ordinary point")
    a2 = local.c2.coeff(m)
    a1 = local.c1.coeff(m - 1)
    a0 = local.c0.coeff(m - 2) if m >= 2 else QI_ZERO
    r1, r2 = _indicial_roots(a2, a1, a0)
    gap = _integer_gap(r1, r2)
    if gap is not None and gap < 0:
        r1, r2 = r2, r1
        gap = -gap
    if gap == 0:
        log_flag = True
    elif gap is None:
        log_flag = False
    else:
        obstruction = _frobenius_obstruction(local, r2, gap)
        log_flag = bool(obstruction)
    part, part_log = _particular_exponent(local)
    return SingularPointReport(
        point=point,
        multiplicity=m,
        fuchsian=True,
        exponents=(r1, r2),
        log_flag=log_flag,
        particular_exponent=part,
        particular_log=part_log,
    )


def _is_zero_point(point) -> bool:
    return isinstance(point, GaussianRational) and point.is_zero()


def _particular_exponent(local: LinearOperator):
    """(exponent, log flag) of the particular solution's leading behavior.

    A simple indicial root at the natural exponent raises one log power; a
    double root there would need log^2, which is out of the supported range.
    """
    rhs = local.rhs
    if rhs is None:
        return None, False
    if isinstance(rhs, Poly):
        if rhs.is_zero():
            return None, False
        e = rhs.valuation()
    else:
        if rhs.is_zero_known():
            return None, False
        e = rhs.order()
    s0, table = _shift_table_polys(local.c2, local.c1, local.c0)
    s = e - s0
    q, l, _c = table[s0]
    if _head_eval(table[s0], s):
        return s, False
    if 2 * q * s + l:  # simple root of the head polynomial
        return s, True
    raise HigherLogUnsupported(
        "particular solution needs log powers beyond the supported range"
    )


def local_shape_report(op: LinearOperator) -> list[SingularPointReport]:
    """Per-point exponent/log/particular data for every singular point."""
    out = []
    for seed in singular_points(op):
        if seed.point == INFINITY:
            if fuchsian_at(op, INFINITY):
                rep = indicial_data(op, INFINITY)
                rep.degenerate = seed.degenerate
                out.append(rep)
            else:
                seed.fuchsian = False
                out.append(seed)
            continue
        if fuchsian_at(op, seed.point):
            rep = indicial_data(op, seed.point)
            rep.multiplicity = seed.multiplicity
            rep.degenerate = seed.degenerate
            out.append(rep)
        else:
            seed.fuchsian = False
            out.append(seed)
    return out
