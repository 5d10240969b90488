"""JSON serialization of exact values, series, and reports.

Scalars travel as strings ("p/q", "p/q+r/s*i"); series as arrays of
[exponent, re, im] triples plus the known order; algebraic numbers carry
their minimal polynomial.  Everything is loss-free and deterministic.
"""
from __future__ import annotations

from .extension import AlgebraicNumber
from .fuchs import INFINITY, LinearOperator, SingularPointReport
from .laurent import LaurentSeries
from .polys import Poly
from .ratfunc import RationalFunction
from .scalars import GaussianRational, Rat


def rat_str(x) -> str:
    return str(x)


def scalar_str(x: GaussianRational) -> str:
    return str(x)


def scalar_from_str(s: str) -> GaussianRational:
    return GaussianRational.from_string(s)


def series_dict(s: LaurentSeries) -> dict:
    return {
        "min_exp": s.minexp,
        "known_order": s.known_relative_order(),
        "coeffs": [[e, str(c.re), str(c.im)] for e, c in s.known_pairs()],
    }


def series_from_dict(d: dict) -> LaurentSeries:
    pairs = [
        (int(e), GaussianRational(Rat(re), Rat(im))) for e, re, im in d["coeffs"]
    ]
    j = d.get("known_order")
    upto = None if j is None else int(d["min_exp"]) + int(j)
    return LaurentSeries.from_pairs(pairs, upto)


def poly_list(p: Poly) -> list:
    return [scalar_str(c) for c in p.c]


def ratfunc_dict(r: RationalFunction) -> dict:
    return {"num": poly_list(r.num), "den": poly_list(r.den)}


def point_obj(p) -> object:
    if p == INFINITY:
        return "inf"
    if isinstance(p, AlgebraicNumber):
        return {
            "u": scalar_str(p.u),
            "v": scalar_str(p.v),
            "minpoly": [scalar_str(p.ext.q), scalar_str(p.ext.p), "1"],
        }
    return scalar_str(p)


def exponent_obj(e) -> object:
    if isinstance(e, AlgebraicNumber):
        return point_obj(e)
    if isinstance(e, GaussianRational):
        return scalar_str(e)
    return str(e)


def singular_report_dict(r: SingularPointReport) -> dict:
    return {
        "point": point_obj(r.point),
        "multiplicity": r.multiplicity,
        "fuchsian": r.fuchsian,
        "exponents": None
        if r.exponents is None
        else [exponent_obj(e) for e in r.exponents],
        "log_flag": r.log_flag,
        "particular_exponent": None
        if r.particular_exponent is None
        else str(r.particular_exponent),
        "particular_log": r.particular_log,
        "branches": r.branches() if r.exponents is not None else None,
    }


def operator_dict(op: LinearOperator) -> dict:
    rhs = None
    if isinstance(op.rhs, Poly):
        rhs = {"poly": poly_list(op.rhs)}
    elif isinstance(op.rhs, LaurentSeries):
        rhs = {"series": series_dict(op.rhs)}
    return {
        "c2": poly_list(op.c2),
        "c1": poly_list(op.c1),
        "c0": poly_list(op.c0),
        "rhs": rhs,
    }


def polygon_dict(poly) -> dict:
    return {"vertices": [[str(a), str(b)] for a, b in poly.vertices]}
