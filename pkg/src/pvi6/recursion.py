"""Per-coefficient linear equations and their Laurent-series solutions.

Substituting the graded expansion into the full sum makes each x-grade k
vanish separately: the grade-k part is A_k(phi_k) + N_k = 0 with A_k a
second-order linear operator in chi built from the grade-0 linearization by
the index shift, and N_k collecting the previously computed coefficients.
A_k is normalized to polynomial coefficients; the solver walks the exponent
lattice dividing by the exact head values and propagates the honest known
window of every series it touches.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diffsum import DiffSum
from .errors import (
    ConstraintViolation,
    InconsistentTruncation,
    InsufficientKnownOrder,
    ResonantHead,
)
from .graded import GradedSeries
from .laurent import LaurentSeries, VariableKind
from .painleve import (
    FamilySpec,
    PVIParams,
    grade0_linear_operator,
    phi0_build,
    pvi_diffsum,
)
from .polys import Poly
from .ratfunc import RationalFunction, pade_reconstruct
from .scalars import QI, QI_ONE, QI_ZERO, GaussianRational


def normalizer_for(f: FamilySpec, p: PVIParams) -> RationalFunction:
    """The scalar multiplier bringing A_k to polynomial coefficients.

    complicated-generic: ((c-a)^2 - 2a chi^2)^4 / ((a-c)^6 chi^4).
    complicated-equal:   8a / chi^2.
    exotic, a != 0, B != 0: (A chi^2 + B chi + 1)^6 / (4 a^2 B^2 chi^2),
    which makes the head factors match their closed form; otherwise the
    theta-only scaling (A chi^2 + B chi + 1)^6 / (16 theta^4 chi^2).
    """
    if f.name == "complicated-generic":
        cma = p.c - p.a
        w = Poly((cma * cma, QI_ZERO, -2 * p.a))
        denom_scalar = (p.a - p.c) ** 6
        return RationalFunction(w**4, Poly.x_power(4).scale(denom_scalar))
    if f.name == "complicated-equal":
        return RationalFunction(Poly.const(8 * p.a), Poly.x_power(2))
    A, B = f.AB(p)
    w = Poly((QI_ONE, B, A))
    if not p.a.is_zero() and not B.is_zero():
        scalar = 4 * p.a * p.a * B * B
    else:
        t2 = QI(f.theta * f.theta)
        scalar = 16 * t2 * t2
    return RationalFunction(w**6, Poly.x_power(2).scale(scalar))


def _rf_to_laurent_poly(rf: RationalFunction) -> LaurentSeries:
    """Exact conversion; the denominator must reduce to a power of chi."""
    if rf.is_zero():
        return LaurentSeries.zero()
    s = rf.den.valuation()
    if rf.den != Poly.x_power(s):
        raise ValueError(f"coefficient did not normalize to a polynomial: {rf}")
    return LaurentSeries(-s, rf.num.c, None)


def shifted_operator_rational(L, k: int, kind: VariableKind):
    """A_k in d/dchi form with rational coefficients, from the grade-0 linear
    part L = (coeff of u2, of u1, of u0) and the index shift for grade k."""
    L2, L1, L0 = L
    mid = L2 * (2 * k - 3) + L1
    low = L2 * ((k - 1) * (k - 2)) + L1 * (k - 1) + L0
    chi = RationalFunction.x_power(1)
    if kind.name == "exotic":
        it = kind.itheta
        t2 = it * it  # -theta^2
        d2 = t2 * chi * chi * L2
        d1 = t2 * chi * L2 + it * chi * mid
        d0 = low
    else:
        d2 = chi**4 * L2
        d1 = 2 * chi**3 * L2 - chi * chi * mid
        d0 = low
    return d2, d1, d0


@dataclass
class CoefficientEquation:
    """A_k(phi) + N_k = 0 in both raw-rational and normalized polynomial form."""

    k: int
    kind: VariableKind
    rational_coeffs: tuple  # (d2, d1, d0) RationalFunction, unnormalized
    op_d2: LaurentSeries  # normalized exact Laurent-polynomial coefficients
    op_d1: LaurentSeries
    op_d0: LaurentSeries
    rhs_raw: LaurentSeries  # N_k before normalization
    rhs_normalized: LaurentSeries  # nu * N_k
    normalizer: RationalFunction

    def q_form(self):
        """(Q2, Q1k, Q0k): coefficients of chi^2 d^2, chi d, 1, unnormalized."""
        d2, d1, d0 = self.rational_coeffs
        chi = RationalFunction.x_power(1)
        return (d2 / (chi * chi), d1 / chi, d0)

    def action_shift_table(self):
        return _shift_table(self.op_d2, self.op_d1, self.op_d0)

    def head_offset(self) -> int:
        return self.action_shift_table()[0]

    def head_values(self):
        """(quad, lin, const) of the head polynomial K(m) dividing each
        coefficient: K(m) = quad*m^2 + lin*m + const."""
        s0, table = self.action_shift_table()
        return table[s0]

    def head_value_at(self, m: int) -> GaussianRational:
        q, l, c = self.head_values()
        return q * (m * m) + l * m + c

    def head_factor(self) -> GaussianRational:
        """The per-grade head scalar: constant for the complicated kind, and
        the head polynomial evaluated at m = k for the exotic kind (the value
        the closed form tabulates)."""
        q, l, c = self.head_values()
        if self.kind.name == "complicated":
            if q or l:
                raise ResonantHead("complicated head is not exponent-independent")
            return c
        return self.head_value_at(self.k)


def _shift_table(c2: LaurentSeries, c1: LaurentSeries, c0: LaurentSeries):
    """K_s(m) coefficients: action of the operator on chi^m is
    sum_s K_s(m) chi^(m+s) with K_s(m) = c2[s+2] m(m-1) + c1[s+1] m + c0[s]."""
    table = {}

    def put(series, which, off):
        for e, v in series.known_pairs():
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
    if not table:
        raise ResonantHead("zero operator")
    s0 = min(table)
    return s0, table


def apply_operator_series(
    c2: LaurentSeries, c1: LaurentSeries, c0: LaurentSeries, phi: LaurentSeries
) -> LaurentSeries:
    d1 = phi.derivative()
    d2 = d1.derivative()
    return c2 * d2 + c1 * d1 + c0 * phi


def apply_operator_rational(coeffs, phi: RationalFunction) -> RationalFunction:
    d2, d1, d0 = coeffs
    p1 = phi.derivative()
    return d2 * p1.derivative() + d1 * p1 + d0 * phi


def solve_linear_laurent(
    c2: LaurentSeries,
    c1: LaurentSeries,
    c0: LaurentSeries,
    rhs: LaurentSeries,
) -> LaurentSeries:
    """The unique Laurent solution of (c2 d^2 + c1 d + c0) y = rhs.

    Forward substitution on the exponent lattice; raises ResonantHead when a
    head value vanishes (homogeneous freedom would enter) and
    InconsistentTruncation when no Laurent order fits the right side.
    """
    s0, table = _shift_table(c2, c1, c0)
    if rhs.upto is None and rhs.is_zero_known():
        return LaurentSeries.zero()
    if rhs.upto is not None and rhs.is_zero_known():
        return LaurentSeries.zero(rhs.upto - s0)
    r = rhs.order() - s0
    nterms = (rhs.upto - rhs.order()) if rhs.upto is not None else (
        len(rhs.coeffs) + 1
    )
    out: list[GaussianRational] = []
    shifts = sorted(table)
    for j in range(nterms):
        m = r + j
        acc = rhs.coeff(rhs.order() + j)
        for s in shifts:
            if s == s0:
                continue
            l = j - (s - s0)
            if 0 <= l < len(out) and out[l]:
                q, li, co = table[s]
                ml = r + l
                acc = acc - (q * (ml * ml) + li * ml + co) * out[l]
        q, li, co = table[s0]
        div = q * (m * m) + li * m + co
        if not div:
            if not acc:
                raise ResonantHead(
                    f"head vanishes at exponent {m}; Laurent solution not unique"
                )
            raise InconsistentTruncation(
                f"head vanishes at exponent {m} with nonzero data; "
                "no Laurent solution at this order"
            )
        out.append(acc / div)
    upto = (r + nterms) if rhs.upto is None else rhs.upto - s0
    return LaurentSeries(r, out, upto)


@dataclass
class ExpansionState:
    family: FamilySpec
    params: PVIParams
    kind: VariableKind
    full_sum: DiffSum
    phi0_rational: RationalFunction
    linear_part: tuple
    normalizer: RationalFunction
    K: int
    J: int
    coefficients: list  # LaurentSeries, index k (0 = leading term)
    equations: list = field(default_factory=list)  # CoefficientEquation, index k-1
    rational_certificates: dict = field(default_factory=dict)
    _residual: GradedSeries | None = None

    def residual(self) -> GradedSeries:
        if self._residual is None:
            s = GradedSeries(
                self.kind,
                {j: self.coefficients[j] for j in range(len(self.coefficients))},
                self.K + 1,
            )
            self._residual = self.full_sum.evaluate(s, x_upto=self.K)
        return self._residual


def build_linear_operator_k(state: ExpansionState, k: int) -> CoefficientEquation:
    """The operator side of the grade-k equation (rhs left empty)."""
    if k < 1:
        raise ValueError("k >= 1")
    rat = shifted_operator_rational(state.linear_part, k, state.kind)
    nu = state.normalizer
    normalized = tuple(_rf_to_laurent_poly(nu * c) for c in rat)
    empty = LaurentSeries.zero(0)
    return CoefficientEquation(
        k=k,
        kind=state.kind,
        rational_coeffs=rat,
        op_d2=normalized[0],
        op_d1=normalized[1],
        op_d0=normalized[2],
        rhs_raw=empty,
        rhs_normalized=empty,
        normalizer=nu,
    )


def compute_rhs_k(state: ExpansionState, k: int) -> LaurentSeries:
    """N_k: the grade-k coefficient of the sum evaluated on the partial sum
    through grade k-1 (with the grade-k slot exactly zero)."""
    if len(state.coefficients) < k:
        raise InsufficientKnownOrder(
            f"coefficients through grade {k - 1} needed before grade {k}"
        )
    s = GradedSeries(
        state.kind,
        {j: state.coefficients[j] for j in range(k)},
        k + 1,
    )
    res = state.full_sum.evaluate(s, x_upto=k)
    rhs = res.grade(k)
    if rhs is None:
        rhs = LaurentSeries.zero()
    if rhs.upto is not None and rhs.is_zero_known() and rhs.upto <= 0:
        raise InsufficientKnownOrder(
            f"grade-{k} right side has an empty known window"
        )
    return rhs


def coefficient_equation(state: ExpansionState, k: int) -> CoefficientEquation:
    eqn = build_linear_operator_k(state, k)
    rhs = compute_rhs_k(state, k)
    nu = state.normalizer
    window = (rhs.upto - rhs.order_lower_bound() + 8) if rhs.upto is not None else 16
    nu_series = _rational_to_series(nu, int(window) + 8)
    eqn.rhs_raw = rhs
    eqn.rhs_normalized = nu_series * rhs
    return eqn


def _rational_to_series(rf: RationalFunction, nterms: int) -> LaurentSeries:
    try:
        return _rf_to_laurent_poly(rf)
    except ValueError:
        return rf.expand_at_zero(nterms)


def solve_k(eqn: CoefficientEquation) -> LaurentSeries:
    """Unique Laurent-series solution of A_k(phi) = -N_k."""
    return solve_linear_laurent(
        eqn.op_d2, eqn.op_d1, eqn.op_d0, -eqn.rhs_normalized
    )


def expand(f: FamilySpec, p: PVIParams, K: int, J: int) -> ExpansionState:
    """Drive the whole recursion: leading term, then grades 1..K."""
    f.validate(p)
    kind = f.variable_kind()
    full = pvi_diffsum(p, kind)
    phi0_rf = phi0_build(f, p)
    linear = grade0_linear_operator(f, p)
    nu = normalizer_for(f, p)
    pad = 2 * K + 8
    state = ExpansionState(
        family=f,
        params=p,
        kind=kind,
        full_sum=full,
        phi0_rational=phi0_rf,
        linear_part=linear,
        normalizer=nu,
        K=K,
        J=J,
        coefficients=[phi0_rf.expand_at_zero(J + pad)],
    )
    for k in range(1, K + 1):
        eqn = coefficient_equation(state, k)
        phi_k = solve_k(eqn)
        if phi_k.upto is not None and not phi_k.is_zero_known():
            have = phi_k.upto - phi_k.minexp
            if have < J:
                raise InsufficientKnownOrder(
                    f"grade {k} solved to {have} < J = {J} known coefficients"
                )
        state.equations.append(eqn)
        state.coefficients.append(phi_k)
    return state


def residual_orders(state: ExpansionState) -> list[dict]:
    """Per-grade certification: every known residual coefficient must vanish."""
    res = state.residual()
    out = []
    for k in range(state.K + 1):
        g = res.grade(k)
        if g is None:
            out.append({"grade": k, "ok": True, "zero_to": None, "first_nonzero": None})
            continue
        ok = g.is_zero_known()
        first = None if ok else g.minexp
        out.append(
            {
                "grade": k,
                "ok": ok,
                "zero_to": g.upto,
                "first_nonzero": first,
            }
        )
    return out


def head_factors(state: ExpansionState) -> list[GaussianRational]:
    return [eqn.head_factor() for eqn in state.equations]


def rationality_certificate(
    state: ExpansionState, k: int, max_deg: int
):
    """Reconstruct phi_k as a rational function and certify it exactly.

    The candidate from the series reconstruction is substituted into the
    grade-k equation with every previous coefficient replaced by its own
    certified rational form, and the identity is checked in rational-function
    arithmetic.  Returns the certified RationalFunction or None.
    """
    if state.kind.name != "exotic":
        raise ConstraintViolation(
            "rationality certificates apply to exotic expansions only"
        )
    if k < 1 or k > state.K:
        raise ValueError("k out of range")
    if k in state.rational_certificates:
        return state.rational_certificates[k]
    cand = pade_reconstruct(state.coefficients[k], max_deg)
    if cand is None:
        return None
    for j in range(1, k):
        if rationality_certificate(state, j, max_deg) is None:
            return None
    terms = {0: state.phi0_rational}
    for j in range(1, k):
        terms[j] = state.rational_certificates[j]
    s = GradedSeries(state.kind, terms, k + 1)
    res = state.full_sum.evaluate(s, x_upto=k)
    rhs = res.grade(k)
    if rhs is None:
        rhs = RationalFunction.const(0)
    rat_ops = shifted_operator_rational(state.linear_part, k, state.kind)
    total = apply_operator_rational(rat_ops, cand) + rhs
    if not total.is_zero():
        return None
    state.rational_certificates[k] = cand
    return cand


def undetermined_coefficients_oracle(
    state: ExpansionState, k: int, nterms: int
) -> LaurentSeries:
    """Brute-force check solution: substitute a truncated unknown-coefficient
    Laurent ansatz into the raw (unnormalized) grade-k equation and solve the
    resulting exact linear system by Gaussian elimination.

    Fully independent of the normalized solver path.
    """
    from .ratfunc import nullspace_vector

    d2, d1, d0 = shifted_operator_rational(state.linear_part, k, state.kind)
    rhs = compute_rhs_k(state, k)
    if rhs.is_zero_known():
        return LaurentSeries.zero(None if rhs.upto is None else rhs.upto)
    win = nterms + 12
    c2 = _rational_to_series(d2, win)
    c1 = _rational_to_series(d1, win)
    c0 = _rational_to_series(d0, win)

    def action(mono_exp: int) -> LaurentSeries:
        phi = LaurentSeries.x_power(mono_exp)
        return apply_operator_series(c2, c1, c0, phi)

    probe1, probe2 = action(101), action(102)
    s0 = min(probe1.order() - 101, probe2.order() - 102)
    r = rhs.order() - s0
    n = min(nterms, (rhs.upto - rhs.order()) if rhs.upto is not None else nterms)
    cols = [action(r + j) for j in range(n)]
    rows = []
    rtarget = []
    base = rhs.order()
    for t in range(n):
        e = base + t
        rows.append([col.coeff(e) if _known(col, e) else QI_ZERO for col in cols])
        rtarget.append(-rhs.coeff(e))
    # square solve by elimination on the augmented system
    sol = _solve_square(rows, rtarget)
    if sol is None:
        raise InconsistentTruncation("oracle linear system is singular")
    return LaurentSeries(r, sol, r + n)


def _known(series: LaurentSeries, e: int) -> bool:
    return series.upto is None or e < series.upto


def _solve_square(rows, target):
    n = len(rows)
    m = [row[:] + [t] for row, t in zip(rows, target)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [v * inv for v in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [vi - f * vc for vi, vc in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]
