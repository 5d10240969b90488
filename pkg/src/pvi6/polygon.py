"""Newton-Bruno polygon of a differential sum and truncation selection.

All geometry is exact: support points have rational coordinates and hull
orientation is decided by the sign of exact cross products.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diffsum import DiffSum
from .scalars import Rat


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class NewtonPolygon:
    """Convex hull vertices, counterclockwise from the lexicographic minimum."""

    vertices: tuple

    def edges(self):
        v = self.vertices
        if len(v) < 2:
            return []
        if len(v) == 2:
            return [(v[0], v[1]), (v[1], v[0])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def is_degenerate(self) -> bool:
        return len(self.vertices) < 3

    def contains(self, p) -> bool:
        """Point inside or on the hull."""
        v = self.vertices
        if len(v) == 1:
            return p == v[0]
        if len(v) == 2:
            if cross(v[0], v[1], p) != 0:
                return False
            lo = min(v[0], v[1])
            hi = max(v[0], v[1])
            return lo <= p <= hi
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def same_cycle(self, listed) -> bool:
        """True if ``listed`` is the same vertex cycle up to rotation/reflection."""
        listed = tuple((Rat(a), Rat(b)) for a, b in listed)
        v = self.vertices
        if len(listed) != len(v):
            return False
        n = len(v)
        if n == 1:
            return listed == v
        for start in range(n):
            if all(listed[i] == v[(start + i) % n] for i in range(n)):
                return True
            if all(listed[i] == v[(start - i) % n] for i in range(n)):
                return True
        return False


def build_polygon(support) -> NewtonPolygon:
    """Exact convex hull of support points (q1, q2)."""
    pts = sorted({(Rat(p[0]), Rat(p[1])) for p in support})
    if not pts:
        raise ValueError("empty support")
    if len(pts) == 1:
        return NewtonPolygon((pts[0],))
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = [hull[0]]
    return NewtonPolygon(tuple(hull))


@dataclass(frozen=True)
class Face:
    """A vertex or edge of the polygon with its admissible directions.

    For an edge, ``rho`` is the single direction slope selecting it.  For a
    vertex, ``rho_range`` is the open interval (lo, hi) of slopes selecting
    it, with None for an unbounded end.
    """

    kind: str
    points: tuple
    rho: object = None
    rho_range: tuple | None = None
    normal: tuple | None = None


def enumerate_faces(polygon: NewtonPolygon, side: str):
    """Faces whose outward normals point to the requested side.

    side="near-zero": truncations relevant as x -> 0, i.e. faces minimizing
    <Q, (1, rho)> (outward normal with negative first component).
    side="near-infinity": faces maximizing the same product (positive first
    component).
    """
    if side not in ("near-zero", "near-infinity"):
        raise ValueError(f"unknown side {side!r}")
    minimize = side == "near-zero"
    v = polygon.vertices
    faces = []
    if len(v) == 1:
        faces.append(
            Face(kind="vertex", points=(v[0],), rho_range=(None, None))
        )
        return faces
    for a, b in polygon.edges():
        d = (b[0] - a[0], b[1] - a[1])
        n = (d[1], -d[0])  # outward for counterclockwise order
        if (n[0] < 0 and minimize) or (n[0] > 0 and not minimize):
            faces.append(
                Face(kind="edge", points=(a, b), rho=n[1] / n[0], normal=n)
            )
    n_v = len(v)
    for i, vert in enumerate(v):
        if n_v == 2:
            neighbors = [v[1 - i]]
        else:
            neighbors = [v[(i - 1) % n_v], v[(i + 1) % n_v]]
        lo, hi = None, None
        ok = True
        for w in neighbors:
            dq1 = vert[0] - w[0]
            dq2 = vert[1] - w[1]
            if dq2 == 0:
                good = dq1 < 0 if minimize else dq1 > 0
                if not good:
                    ok = False
                    break
                continue
            bound = -dq1 / dq2
            upper = (dq2 > 0) if minimize else (dq2 < 0)
            if upper:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if not ok:
            continue
        if lo is not None and hi is not None and lo >= hi:
            continue
        faces.append(Face(kind="vertex", points=(vert,), rho_range=(lo, hi)))
    return faces


def truncate_for_direction(g: DiffSum, rho0) -> tuple:
    """Monomial parts minimizing q1 + q2*rho0; returns (minimum, truncation)."""
    rho0 = Rat(rho0)
    pts = g.support()
    if not pts:
        raise ValueError("empty differential sum")
    c = min(q1 + q2 * rho0 for q1, q2 in pts)
    kept = {}
    for q2, coeff in g.monomials.items():
        tot = q2[0] + q2[1] + q2[2]
        keep_terms = {
            k: s for k, s in coeff.terms.items() if Rat(k) + tot * rho0 == c
        }
        if keep_terms:
            kept[q2] = type(coeff)(coeff.kind, keep_terms, None)
    return c, DiffSum(g.kind, kept)
