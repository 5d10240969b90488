"""Series in x whose grade coefficients live in a coefficient ring in chi.

The coefficient ring is either LaurentSeries (truncated, with honest
known-order tracking) or RationalFunction (exact); both expose the same
arithmetic surface, so GradedSeries is generic over them.  ``known_x`` is
the first unknown x-grade (None = all grades known); a grade absent from
``terms`` below ``known_x`` is exactly zero.
"""
from __future__ import annotations

from .laurent import LaurentSeries, VariableKind
from .ratfunc import RationalFunction
from .scalars import GaussianRational

_INF = float("inf")


def _fin(u):
    return _INF if u is None else u


def _unfin(u):
    return None if u == _INF else int(u)


def _is_exact_zero(c) -> bool:
    if isinstance(c, RationalFunction):
        return c.is_zero()
    return c.is_exact() and c.is_zero_known()


class GradedSeries:
    __slots__ = ("kind", "terms", "known_x")

    def __init__(self, kind: VariableKind, terms: dict, known_x: int | None):
        self.kind = kind
        if known_x is not None:
            terms = {k: c for k, c in terms.items() if k < known_x}
        self.terms = {k: c for k, c in terms.items() if not _is_exact_zero(c)}
        self.known_x = known_x

    # -- constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, kind: VariableKind, known_x: int | None = None) -> GradedSeries:
        return cls(kind, {}, known_x)

    @classmethod
    def single(cls, kind: VariableKind, grade: int, coeff, known_x=None) -> GradedSeries:
        return cls(kind, {grade: coeff}, known_x)

    # -- queries ---------------------------------------------------------------
    def grades(self):
        return sorted(self.terms)

    def grade(self, k: int):
        return self.terms.get(k)

    def min_grade(self):
        """Lowest grade with a (known-)nonzero coefficient; None if none stored."""
        return min(self.terms) if self.terms else None

    def _grade_lower_bound(self):
        if self.terms:
            return min(self.terms)
        return _fin(self.known_x)

    def x_order(self):
        """Lowest grade whose coefficient has a certified nonzero term."""
        for k in sorted(self.terms):
            c = self.terms[k]
            if isinstance(c, RationalFunction):
                if not c.is_zero():
                    return k
            elif not c.is_zero_known():
                return k
        return None

    def is_zero_known(self) -> bool:
        for c in self.terms.values():
            if isinstance(c, RationalFunction):
                if not c.is_zero():
                    return False
            elif not c.is_zero_known():
                return False
        return True

    # -- arithmetic ---------------------------------------------------------------
    def __add__(self, other: GradedSeries) -> GradedSeries:
        assert self.kind == other.kind
        ku = min(_fin(self.known_x), _fin(other.known_x))
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return GradedSeries(self.kind, out, _unfin(ku))

    def __neg__(self) -> GradedSeries:
        return GradedSeries(
            self.kind, {k: -c for k, c in self.terms.items()}, self.known_x
        )

    def __sub__(self, other: GradedSeries) -> GradedSeries:
        return self + (-other)

    def mul(self, other: GradedSeries, x_upto: int | None = None) -> GradedSeries:
        assert self.kind == other.kind
        ku = min(
            _fin(self.known_x) + other._grade_lower_bound(),
            _fin(other.known_x) + self._grade_lower_bound(),
        )
        if x_upto is not None:
            ku = min(ku, x_upto + 1)
        out: dict = {}
        for i, ci in self.terms.items():
            for j, cj in other.terms.items():
                k = i + j
                if k >= ku:
                    continue
                p = ci * cj
                out[k] = out[k] + p if k in out else p
        return GradedSeries(self.kind, out, _unfin(ku))

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            return self.mul(other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, scalar) -> GradedSeries:
        return GradedSeries(
            self.kind, {k: c * scalar for k, c in self.terms.items()}, self.known_x
        )

    def shift_x(self, n: int) -> GradedSeries:
        return GradedSeries(
            self.kind,
            {k + n: c for k, c in self.terms.items()},
            None if self.known_x is None else self.known_x + n,
        )

    def delta(self) -> GradedSeries:
        """Apply x d/dx gradewise: k*c_k plus the chi-derivation of c_k."""
        out = {}
        for k, c in self.terms.items():
            d = c.delta(self.kind)
            out[k] = d + c * GaussianRational(k) if k else d
        return GradedSeries(self.kind, out, self.known_x)

    def truncate_x(self, known_x: int) -> GradedSeries:
        ku = known_x if self.known_x is None else min(self.known_x, known_x)
        return GradedSeries(self.kind, self.terms, ku)

    def map_coeffs(self, fn) -> GradedSeries:
        return GradedSeries(
            self.kind, {k: fn(c) for k, c in self.terms.items()}, self.known_x
        )

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.terms == other.terms
            and self.known_x == other.known_x
        )

    def __str__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(f"[{self.terms[k]}]*x^{k}" for k in sorted(self.terms))
        tail = "" if self.known_x is None else f" + O(x^{self.known_x})"
        return body + tail

    __repr__ = __str__


def delta_apply(f: GradedSeries) -> GradedSeries:
    """x d/dx on a graded series (the Euler derivation)."""
    return f.delta()
