"""Zippers: chains of similarities whose attractor is a path from z_0 to z_k.

A zipper with vertices z_0..z_k and signature eps satisfies
S_i(z_0) = z_{i-1+eps_i} and S_i(z_k) = z_{i-eps_i}: each map sends the
whole chain onto the i-th link, reversed when eps_i = 1.  Map and vertex
indices are 0-based here, so map i runs between z_i and z_{i+1}.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Optional, Sequence, Union

from .errors import ChainBroken, ChainNotFound, NotSimple, PolylineBroken
from .field import Scalar
from .geometry import (
    ConvexPolygon,
    IntersectionKind,
    Segment,
    Similarity,
    _along,
    classify_intersection,
    compose,
    contains,
    convex_hull,
    orient,
)
from .symmetry import augment
from .system import PolygonalSystem, incidence_graph
from .topology import find_center_map, require_symmetric_regular

Hull = Union[ConvexPolygon, Segment]


@dataclass(frozen=True)
class Zipper:
    maps: tuple[Similarity, ...]
    vertices: tuple[Scalar, ...]
    signature: tuple[int, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def k(self) -> int:
        return len(self.maps)

    def check(self) -> bool:
        z0, zk = self.vertices[0], self.vertices[-1]
        return all(
            s(z0) == self.vertices[i + e] and s(zk) == self.vertices[i + 1 - e]
            for i, (s, e) in enumerate(zip(self.maps, self.signature))
        )

    def ratios2(self) -> list[Scalar]:
        return [s.ratio2() for s in self.maps]

    def to_json(self) -> dict:
        out = {
            "maps": [
                {"a": s.a.literal(), "b": s.b.literal(), "mirror": s.mirror} for s in self.maps
            ],
            "vertices": [v.literal() for v in self.vertices],
            "signature": list(self.signature),
        }
        if self.labels:
            out["labels"] = list(self.labels)
        return out


def verify_zipper(maps: Sequence[Similarity], z0: Scalar, zk: Scalar) -> Zipper:
    """Derive vertices and signature from endpoint images; ChainBroken(i) is 1-based."""
    if not maps:
        raise ValueError("a zipper needs at least one map")
    if z0 == zk:
        raise ValueError("zipper endpoints must differ")
    verts = [z0]
    sig = []
    last = len(maps) - 1
    for i, s in enumerate(maps):
        p, q = s(z0), s(zk)
        cur = verts[-1]
        if p == cur:
            e, nxt = 0, q
        elif q == cur:
            e, nxt = 1, p
        else:
            raise ChainBroken(i + 1, "no endpoint image meets the previous vertex")
        if i == last and nxt != zk:
            raise ChainBroken(i + 1, f"chain ends at {nxt.literal()}, not at z_k")
        sig.append(e)
        verts.append(nxt)
    return Zipper(tuple(maps), tuple(verts), tuple(sig))


def zipper_polyline(z: Zipper, depth: int) -> list[Scalar]:
    """Vertices of the depth-``depth`` refinement: k**depth + 1 points from z_0 to z_k."""
    pts = [z.vertices[0], z.vertices[-1]]
    for _ in range(depth):
        new = [pts[0]]
        for s, e in zip(z.maps, z.signature):
            img = [s(p) for p in pts]
            if e:
                img.reverse()
            new.extend(img[1:])
        pts = new
    return pts


# --------------------------------------------------------------------------
# Jordan arc check


class JordanStatus(enum.Enum):
    JORDAN = "jordan"
    NOT_JORDAN = "not_jordan"
    UNKNOWN = "unknown"


@dataclass
class JordanVerdict:
    status: JordanStatus
    depth: Optional[int] = None
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {"status": self.status.value, "depth": self.depth, "witness": self.witness}


def _hull_of(points: Sequence[Scalar]) -> Optional[Hull]:
    hull = convex_hull(list(dict.fromkeys(points)))
    if len(hull) == 1:
        return None
    if len(hull) == 2:
        return Segment(hull[0], hull[1])
    return ConvexPolygon(hull, check=False)


def _hull_contains(outer: Hull, inner: Hull) -> bool:
    if isinstance(outer, ConvexPolygon):
        return contains(outer, inner)
    p, q = outer.p, outer.q
    u = q - p
    return all(
        orient(p, q, v) == 0 and _along(u, v, p) >= 0 and _along(u, v, q) <= 0
        for v in inner.vertices
    )


def _image(h: Hull, s: Similarity) -> Hull:
    return h.image(s)


def invariant_hull(z: Zipper, rounds: int = 8) -> Optional[Hull]:
    """A convex set H with S_i(H) inside H for all i, grown from the vertex hull."""
    pts = list(z.vertices)
    for _ in range(rounds):
        h = _hull_of(pts)
        if h is None:
            return None
        imgs = [_image(h, s) for s in z.maps]
        if all(_hull_contains(h, g) for g in imgs):
            return h
        pts = list(h.vertices) + [v for g in imgs for v in g.vertices]
    return None


def _segment_covered(h: Segment, images: list[Segment]) -> bool:
    """Is the segment ``h`` the union of the (sub)segments ``images``?"""
    u = h.q - h.p
    spans = []
    for g in images:
        a, b = g.p, g.q
        if _along(u, a, b) > 0:
            a, b = b, a
        spans.append((a, b))
    spans.sort(key=cmp_to_key(lambda x, y: _along(u, x[0], y[0])))
    reach = h.p
    for a, b in spans:
        if _along(u, a, reach) > 0:
            return False
        if _along(u, b, reach) > 0:
            reach = b
    return reach == h.q


def _bbox(h: Hull) -> tuple[float, float, float, float]:
    xs, ys = zip(*(v.approx() for v in h.vertices))
    return min(xs), min(ys), max(xs), max(ys)


def _bbox_apart(b1, b2, slack: float = 1e-9) -> bool:
    return b1[2] + slack < b2[0] or b2[2] + slack < b1[0] or b1[3] + slack < b2[1] or b2[3] + slack < b1[1]


def jordan_check(z: Zipper, max_depth: int = 4, hull: Optional[Hull] = None) -> JordanVerdict:
    """Semi-decide whether the zipper attractor is a Jordan arc.

    K_i (the part generated by map i) lies in the union of the depth-d cells
    S_i S_w (H) for any invariant convex H.  Jordan is certified when
    non-adjacent parts have disjoint cells and adjacent parts share only
    their linking vertex.  NotJordan needs an exact witness: a point of the
    attractor lying in two parts where that is not allowed, or two first
    level cells overlapping when H is exactly the attractor (a segment
    covered by its images).
    """
    h = hull if hull is not None else invariant_hull(z)
    if h is None:
        return JordanVerdict(JordanStatus.UNKNOWN, None, {"reason": "no invariant convex hull"})
    k = z.k
    verts = z.vertices
    exact = isinstance(h, Segment) and _segment_covered(h, [_image(h, s) for s in z.maps])
    level = [((i,), s) for i, s in enumerate(z.maps)]
    for d in range(1, max_depth + 1):
        if d > 1:
            level = [(w + (j,), compose(s, t)) for w, s in level for j, t in enumerate(z.maps)]
        # exact points of the attractor: images of the chain vertices
        owners: dict[Scalar, set[int]] = {}
        for w, s in level:
            for v in verts:
                owners.setdefault(s(v), set()).add(w[0])
        for p, parts in owners.items():
            for i, j in itertools.combinations(sorted(parts), 2):
                if j - i > 1 or p != verts[j]:
                    return JordanVerdict(
                        JordanStatus.NOT_JORDAN, d, {"parts": [i + 1, j + 1], "point": p.literal()}
                    )
        cells = [(w[0], _image(h, s)) for w, s in level]
        boxes = [_bbox(c) for _, c in cells]
        ok = True
        for x in range(len(cells)):
            i, ci = cells[x]
            for y in range(x + 1, len(cells)):
                j, cj = cells[y]
                if i == j or _bbox_apart(boxes[x], boxes[y]):
                    continue
                lo, hi = min(i, j), max(i, j)
                r = classify_intersection(ci, cj)
                if r.kind is IntersectionKind.DISJOINT:
                    continue
                if hi - lo == 1 and r.kind is IntersectionKind.COMMON_VERTEX and r.point == verts[hi]:
                    continue
                if exact and d == 1:
                    return JordanVerdict(
                        JordanStatus.NOT_JORDAN, d, {"parts": [lo + 1, hi + 1], "overlap": r.kind.value}
                    )
                ok = False
                break
            if not ok:
                break
        if ok:
            return JordanVerdict(JordanStatus.JORDAN, d)
    return JordanVerdict(JordanStatus.UNKNOWN, max_depth, {"reason": "depth exhausted"})


# --------------------------------------------------------------------------
# arc zippers of the main tree


def extract_arc_zipper(system: PolygonalSystem, k: Optional[int] = None) -> Zipper:
    """Zipper for the main-tree arc from the center O to vertex ``k`` (0-based, default the last).

    Built from the center map (when there is one) and, for every piece
    P_l on the incidence-tree chain from O to A_k, two maps S_l f^e whose
    images of the arc enter and leave the piece.
    """
    group, _ = require_symmetric_regular(system)
    n = system.n
    k = n - 1 if k is None else k
    if not 0 <= k < n:
        raise ValueError(f"vertex index {k} out of range")
    verts = system.base.vertices
    center = system.base.centroid()
    target = verts[k]
    rots = [group.power(e) for e in range(n)]
    graph = incidence_graph(system)

    def exponent(i: int, point: Scalar, other: Scalar) -> tuple[Similarity, int]:
        s = system.maps[i]
        for e in range(n):
            t = compose(s, rots[e])
            if t(target) == point and t(center) == other:
                return t, e
        raise ChainNotFound(f"no rotation sends the arc end into piece {i + 1} at {point.literal()}")

    holders = [i for i, s in enumerate(system.maps) if any(s(v) == target for v in verts)]
    if len(holders) != 1:
        raise ChainNotFound(f"vertex {k + 1} lies in {len(holders)} pieces")
    found = find_center_map(system)
    maps: list[Similarity] = []
    labels: list[str] = []
    if found is not None:
        i0 = found[0]
        path = graph.path(("piece", i0), ("piece", holders[0]))
        exit_point = path[1][1] if len(path) > 1 else target
        t, e = exponent(i0, exit_point, center)
        maps.append(t)
        labels.append(f"S{i0 + 1} f^{e}")
        path = path[1:]
    else:
        path = graph.path(("point", center), ("piece", holders[0]))
    # path now alternates point, piece, point, piece ... ending at the target piece
    for x in range(1, len(path), 2):
        l = path[x][1]
        entry = path[x - 1][1]
        leave = path[x + 1][1] if x + 1 < len(path) else target
        mid = system.maps[l](center)
        t_in, e_in = exponent(l, entry, mid)
        t_out, e_out = exponent(l, leave, mid)
        maps += [t_in, t_out]
        labels += [f"S{l + 1} f^{e_in}", f"S{l + 1} f^{e_out}"]
    z = verify_zipper(maps, center, target)
    return Zipper(z.maps, z.vertices, z.signature, tuple(labels))


# --------------------------------------------------------------------------
# zippers over a segment and the dendrite criterion


def segment_zipper(
    system: PolygonalSystem, a: Scalar, b: Scalar, selection: Sequence[Similarity]
) -> Zipper:
    """Order the images of [a, b] under ``selection`` into a simple chain from a to b."""
    if not selection:
        raise PolylineBroken("empty selection")
    segs = [(s, s(a), s(b)) for s in selection]
    ends: dict[Scalar, list[int]] = {}
    for x, (_, p, q) in enumerate(segs):
        ends.setdefault(p, []).append(x)
        ends.setdefault(q, []).append(x)
    used = [False] * len(segs)
    order = []
    cur = a
    while cur != b or not order:
        nxt = [x for x in ends.get(cur, []) if not used[x]]
        if len(nxt) != 1:
            raise PolylineBroken(f"{len(nxt)} unused segments leave {cur.literal()}")
        x = nxt[0]
        used[x] = True
        order.append(x)
        _, p, q = segs[x]
        cur = q if p == cur else p
    if not all(used):
        raise PolylineBroken(f"{used.count(False)} segments are not on the chain from A to B")
    chain = [Segment(segs[x][1], segs[x][2]) for x in order]
    for x, y in itertools.combinations(range(len(chain)), 2):
        r = classify_intersection(chain[x], chain[y])
        if y == x + 1:
            if r.kind is IntersectionKind.COMMON_VERTEX:
                continue
        elif r.kind is IntersectionKind.DISJOINT:
            continue
        raise NotSimple(f"segments {x + 1} and {y + 1} of the chain meet improperly")
    return verify_zipper([segs[x][0] for x in order], a, b)


def find_segment_selections(
    system: PolygonalSystem, a: Scalar, b: Scalar, max_size: int = 6
) -> tuple[list[tuple[int, ...]], int]:
    """Exhaustive search over subsets of the augmented system.

    Returns the index tuples (into the augmented map list) that give a
    valid segment zipper, and the number of subsets tried.
    """
    maps = augment(system).maps
    ends = [(s(a), s(b)) for s in maps]
    found, tried = [], 0
    for r in range(1, max_size + 1):
        for combo in itertools.combinations(range(len(maps)), r):
            tried += 1
            # a chain from a to b has degree 1 at a and b and 2 elsewhere
            deg: dict[Scalar, int] = {}
            for i in combo:
                for p in ends[i]:
                    deg[p] = deg.get(p, 0) + 1
            if deg.get(a) != 1 or deg.get(b) != 1 or sum(d != 2 for d in deg.values()) != 2:
                continue
            try:
                segment_zipper(system, a, b, [maps[i] for i in combo])
            except (PolylineBroken, NotSimple, ChainBroken):
                continue
            found.append(combo)
    return found, tried


class DendriteKind(enum.Enum):
    JORDAN_ARC = "jordan_arc"
    DENDRITE = "dendrite"
    UNKNOWN = "unknown"


@dataclass
class DendriteVerdict:
    kind: DendriteKind
    counts: list[int]
    u: int
    order_lower_bound: Optional[int] = None
    jordan: Optional[JordanVerdict] = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "counts": self.counts,
            "u": self.u,
            "order_lower_bound": self.order_lower_bound,
            "jordan": self.jordan.to_json() if self.jordan else None,
        }


def dendrite_bound(u: int, n: int) -> int:
    return min(u + 1, n)


def dendrite_criterion(z: Zipper, system: PolygonalSystem, max_depth: int = 4) -> DendriteVerdict:
    """Count chain segments per depth-1 piece and grade the zipper attractor."""
    pieces = system.pieces()
    counts = [0] * len(pieces)
    for x in range(z.k):
        seg = Segment(z.vertices[x], z.vertices[x + 1])
        holders = [i for i, piece in enumerate(pieces) if contains(piece, seg)]
        if len(holders) != 1:
            raise PolylineBroken(f"chain segment {x + 1} lies in {len(holders)} pieces")
        counts[holders[0]] += 1
    u = max(counts)
    if u >= 2:
        return DendriteVerdict(DendriteKind.DENDRITE, counts, u, dendrite_bound(u, system.n))
    verdict = jordan_check(z, max_depth)
    kind = DendriteKind.JORDAN_ARC if verdict.status is JordanStatus.JORDAN else DendriteKind.UNKNOWN
    return DendriteVerdict(kind, counts, u, None, verdict)
