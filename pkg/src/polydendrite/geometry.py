"""Similarities of the plane and exact predicates on convex polygons.

Points are :class:`~polydendrite.field.Scalar` values read as complex
numbers.  Every predicate here is exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

import mpmath

from .errors import DegeneratePolygon, FieldMismatch
from .field import Scalar

Point = Scalar


def orient(a: Point, b: Point, c: Point) -> int:
    """+1 if a, b, c turn left, -1 if right, 0 if collinear."""
    return ((b - a).conjugate() * (c - a)).imag_sign()


def _along(u: Point, p: Point, q: Point) -> int:
    """Sign of <u, p - q>: compares p and q along direction u."""
    return (u.conjugate() * (p - q)).real_sign()


# --------------------------------------------------------------------------
# similarities


@dataclass(frozen=True)
class Similarity:
    """``z -> a*z + b``, or ``z -> a*conj(z) + b`` when ``mirror`` is set."""

    a: Scalar
    b: Scalar
    mirror: bool = False

    def __post_init__(self) -> None:
        if self.a.is_zero():
            raise ValueError("a similarity needs a nonzero linear coefficient")
        if self.a.field is not self.b.field:
            raise FieldMismatch("coefficients of a similarity must lie in one field")

    @classmethod
    def identity(cls, field) -> Similarity:
        return cls(field.one, field.zero)

    @property
    def field(self):
        return self.a.field

    def __call__(self, z: Point) -> Point:
        if self.mirror:
            z = z.conjugate()
        return self.a * z + self.b

    def __matmul__(self, other: Similarity) -> Similarity:
        return compose(self, other)

    def ratio2(self) -> Scalar:
        """Squared similarity ratio |a|^2 (a real field element)."""
        return self.a.abs2()

    def is_contraction(self) -> bool:
        return (self.field.one - self.ratio2()).real_sign() > 0

    def inverse(self) -> Similarity:
        if self.mirror:
            ca = self.a.conjugate()
            return Similarity(1 / ca, -self.b.conjugate() / ca, True)
        return Similarity(1 / self.a, -self.b / self.a)

    def fixed_point(self) -> Point:
        one = self.field.one
        if self.mirror:
            return (self.a * self.b.conjugate() + self.b) / (one - self.ratio2())
        return self.b / (one - self.a)

    def __repr__(self) -> str:
        kind = "mirror" if self.mirror else "direct"
        return f"Similarity({kind} a={self.a.literal()} b={self.b.literal()})"


def apply(sim: Similarity, p: Point) -> Point:
    return sim(p)


def compose(f: Similarity, g: Similarity) -> Similarity:
    """The similarity f o g."""
    if f.mirror:
        ga, gb = g.a.conjugate(), g.b.conjugate()
    else:
        ga, gb = g.a, g.b
    return Similarity(f.a * ga, f.a * gb + f.b, f.mirror != g.mirror)


# --------------------------------------------------------------------------
# convex sets


class ConvexPolygon:
    """A strictly convex polygon with counterclockwise vertices."""

    __slots__ = ("vertices", "_key")

    def __init__(self, vertices: Sequence[Point], *, check: bool = True) -> None:
        self.vertices = tuple(vertices)
        self._key = None
        if check:
            _check_strictly_convex(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def field(self):
        return self.vertices[0].field

    def edges(self):
        vs = self.vertices
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]

    def key(self) -> frozenset:
        """Vertex set; determines a convex polygon."""
        if self._key is None:
            self._key = frozenset(self.vertices)
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def image(self, sim: Similarity) -> ConvexPolygon:
        vs = [sim(v) for v in self.vertices]
        if sim.mirror:
            vs = vs[:1] + vs[:0:-1]
        return ConvexPolygon(vs, check=False)

    def canonical(self) -> str:
        """Order-independent text form: vertex literals in CCW order from the least one."""
        vs = self.vertices
        start = min(range(len(vs)), key=lambda k: vs[k].sort_key())
        return " ".join(v.literal() for v in vs[start:] + vs[:start])

    def area_form(self) -> Scalar:
        """2*i*area as a field element (available in every cyclotomic field)."""
        vs = self.vertices
        total = vs[0].field.zero
        for k in range(len(vs)):
            p, q = vs[k], vs[(k + 1) % len(vs)]
            w = p.conjugate() * q
            total = total + (w - w.conjugate())
        return total * Fraction(1, 2)

    def area(self) -> Scalar:
        """Exact area; needs i in the field."""
        return self.area_form() / (self.field.i * 2)

    def centroid(self) -> Point:
        total = self.field.zero
        for v in self.vertices:
            total = total + v
        return total * Fraction(1, len(self.vertices))

    def is_regular(self) -> bool:
        vs = self.vertices
        c = self.centroid()
        radius = (vs[0] - c).abs2()
        side = (vs[1] - vs[0]).abs2()
        return all((v - c).abs2() == radius for v in vs) and all(
            (q - p).abs2() == side for p, q in self.edges()
        )

    def __repr__(self) -> str:
        return f"ConvexPolygon({self.canonical()})"


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    @property
    def vertices(self) -> tuple[Point, ...]:
        return (self.p, self.q) if self.p != self.q else (self.p,)

    def image(self, sim: Similarity) -> Segment:
        return Segment(sim(self.p), sim(self.q))


def _check_strictly_convex(vs: tuple[Point, ...]) -> None:
    n = len(vs)
    if n < 3:
        raise DegeneratePolygon(f"a polygon needs at least 3 vertices, got {n}")
    if len(set(vs)) != n:
        raise DegeneratePolygon("repeated vertex")
    fields = {v.field for v in vs}
    if len(fields) != 1:
        raise FieldMismatch("polygon vertices lie in different fields")
    for k in range(n):
        a, b = vs[k], vs[(k + 1) % n]
        for t in range(n):
            if t in (k, (k + 1) % n):
                continue
            s = orient(a, b, vs[t])
            if s == 0:
                raise DegeneratePolygon(f"vertex {t} is collinear with edge {k}")
            if s < 0:
                raise DegeneratePolygon(
                    f"vertex {t} lies right of edge {k}: not convex or not counterclockwise"
                )


def regular_polygon(center: Point, first: Point, n: int) -> ConvexPolygon:
    """Regular n-gon with the given center and first vertex (needs n | N)."""
    rot = center.field.root_of_unity(n)
    vs, v = [], first - center
    for _ in range(n):
        vs.append(v + center)
        v = v * rot
    return ConvexPolygon(vs)


# --------------------------------------------------------------------------
# location and intersection


class LocationKind(enum.Enum):
    INTERIOR = "interior"
    VERTEX = "vertex"
    EDGE_INTERIOR = "edge_interior"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class Location:
    kind: LocationKind
    index: Optional[int] = None


def locate(p: Point, poly: ConvexPolygon) -> Location:
    vs = poly.vertices
    n = len(vs)
    on_edge = None
    for k in range(n):
        s = orient(vs[k], vs[(k + 1) % n], p)
        if s < 0:
            return Location(LocationKind.EXTERIOR)
        if s == 0 and on_edge is None:
            on_edge = k
    if on_edge is None:
        return Location(LocationKind.INTERIOR)
    if p == vs[on_edge]:
        return Location(LocationKind.VERTEX, on_edge)
    if p == vs[(on_edge + 1) % n]:
        return Location(LocationKind.VERTEX, (on_edge + 1) % n)
    return Location(LocationKind.EDGE_INTERIOR, on_edge)


def contains(outer: ConvexPolygon, inner) -> bool:
    """Closed containment; by convexity checking the vertices suffices."""
    return all(locate(v, outer).kind is not LocationKind.EXTERIOR for v in inner.vertices)


class IntersectionKind(enum.Enum):
    DISJOINT = "disjoint"
    COMMON_VERTEX = "common_vertex"
    OTHER = "other"


@dataclass(frozen=True)
class Intersection:
    kind: IntersectionKind
    point: Optional[Point] = None

    @property
    def is_disjoint(self) -> bool:
        return self.kind is IntersectionKind.DISJOINT

    @property
    def is_common_vertex(self) -> bool:
        return self.kind is IntersectionKind.COMMON_VERTEX


DISJOINT = Intersection(IntersectionKind.DISJOINT)
OTHER = Intersection(IntersectionKind.OTHER)


def _cmp_xy(p: Point, q: Point) -> int:
    d = p - q
    return d.real_sign() or d.imag_sign()


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Exact hull (monotone chain), CCW, without collinear points.

    Returns one point or two segment endpoints for degenerate input.
    """
    pts = sorted(set(points), key=cmp_to_key(_cmp_xy))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def _extremes(u: Point, pts: Sequence[Point]) -> tuple[Point, Point]:
    lo = hi = pts[0]
    for p in pts[1:]:
        if _along(u, p, lo) < 0:
            lo = p
        if _along(u, p, hi) > 0:
            hi = p
    return lo, hi


def _collinear_overlap(u: Point, f1, f2, v1, v2) -> Intersection:
    lo1, hi1 = _extremes(u, f1)
    lo2, hi2 = _extremes(u, f2)
    lo = lo1 if _along(u, lo1, lo2) >= 0 else lo2
    hi = hi1 if _along(u, hi1, hi2) <= 0 else hi2
    s = _along(u, lo, hi)
    if s > 0:
        return DISJOINT
    if s < 0:
        return OTHER
    if lo in v1 and lo in v2:
        return Intersection(IntersectionKind.COMMON_VERTEX, lo)
    return OTHER


def classify_intersection(q1, q2) -> Intersection:
    """Classify the intersection of two closed convex sets.

    ``q1``, ``q2`` are :class:`ConvexPolygon` or :class:`Segment` (anything
    exposing hull ``vertices``).  The answer is DISJOINT, COMMON_VERTEX (the
    intersection is one point that is a vertex of both) or OTHER.

    Works on the Minkowski difference D = q1 - q2: the sets meet iff 0 is in
    D, a vertex of D has a unique decomposition (so the sets touch in one
    common vertex), and 0 on an edge of D reduces to overlapping two
    collinear faces.
    """
    v1, v2 = q1.vertices, q2.vertices
    diff = convex_hull([a - b for a in v1 for b in v2])
    zero = v1[0].field.zero
    if len(diff) == 1:
        return Intersection(IntersectionKind.COMMON_VERTEX, v1[0]) if diff[0].is_zero() else DISJOINT
    if len(diff) == 2:
        d1, d2 = diff
        u = d2 - d1
        if orient(d1, d2, zero) != 0 or _along(u, zero, d1) < 0 or _along(u, zero, d2) > 0:
            return DISJOINT
        return _collinear_overlap(u, v1, v2, v1, v2)
    where = locate(zero, ConvexPolygon(diff, check=False))
    if where.kind is LocationKind.EXTERIOR:
        return DISJOINT
    if where.kind is LocationKind.INTERIOR:
        return OTHER
    if where.kind is LocationKind.VERTEX:
        for a in v1:
            if a in v2:
                return Intersection(IntersectionKind.COMMON_VERTEX, a)
        raise AssertionError("vertex of the difference set without a common point")
    k = where.index
    d1, d2 = diff[k], diff[(k + 1) % len(diff)]
    u = d2 - d1
    # outward faces: q1 minimal along the left normal, q2 maximal
    w1 = [(u.conjugate() * a) for a in v1]
    w2 = [(u.conjugate() * b) for b in v2]
    m1 = min(w1, key=cmp_to_key(lambda x, y: (x - y).imag_sign()))
    m2 = max(w2, key=cmp_to_key(lambda x, y: (x - y).imag_sign()))
    f1 = [a for a, w in zip(v1, w1) if (w - m1).imag_sign() == 0]
    f2 = [b for b, w in zip(v2, w2) if (w - m2).imag_sign() == 0]
    return _collinear_overlap(u, f1, f2, v1, v2)


# --------------------------------------------------------------------------
# vertex angles


def _ceil_full_turn_over_angle(w: Point) -> int:
    """ceil(2*pi / arg(w)) for arg(w) in (0, pi), decided exactly."""
    x, y = w.approx()
    theta = math.atan2(y, x)
    q = 2 * math.pi / theta
    k = round(q)
    if abs(q - k) > 1e-9:
        return math.ceil(q)
    # near an integer: k * theta == 2*pi  iff  w^k is a positive real
    wk = w ** k
    if wk.imag_sign() == 0 and wk.real_sign() > 0:
        return k
    re, im = w._interval_parts(256)
    with mpmath.workprec(256):
        theta = mpmath.atan2(mpmath.mpf(im.mid), mpmath.mpf(re.mid))
        return int(mpmath.ceil(2 * mpmath.pi / theta))


def vertex_angle_forms(poly: ConvexPolygon) -> list[Point]:
    """For each vertex, a field element whose argument is the interior angle."""
    vs = poly.vertices
    n = len(vs)
    return [
        (vs[k - 1] - vs[k]) * (vs[(k + 1) % n] - vs[k]).conjugate() for k in range(n)
    ]


def full_turn_ceiling(poly: ConvexPolygon) -> int:
    """ceil(2*pi / theta_min) over the vertex angles of ``poly``."""
    return max(_ceil_full_turn_over_angle(w) for w in vertex_angle_forms(poly))
