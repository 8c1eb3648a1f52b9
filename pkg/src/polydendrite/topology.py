"""Main tree of a symmetric system and classification of its special points.

For a regular base polygon with a rotation group the main tree is an n-pod:
arcs from the center O to each vertex A_k, meeting only at O.  Each arc is
approximated by the contact points on the unique incidence-tree path from
the piece holding O to the piece holding A_k.

Point orders are combinatorial: images of O have order n, a contact point
with s preimage pieces has order s, and the vertices of P are end points.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .attractor import CellSet, approximate, base_cells, hutchinson_step, preimage_count, vertex_incidence
from .errors import ChainNotFound, ConditionViolated, NotATree, RegularityRequired, SymmetryRequired
from .field import Scalar
from .geometry import ConvexPolygon, LocationKind, Similarity, full_turn_ceiling, locate, orient
from .symmetry import SymmetryAction, SymmetryGroup, check_symmetry
from .system import IncidenceGraph, PolygonalSystem, index_string, node_label, validate


def ramification_bound(n: int) -> int:
    """Largest possible order of a contact-type point for a regular n-gon: 1 + ceil(4/(n-2))."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return 1 + -(-4 // (n - 2))


def general_order_bound(poly: ConvexPolygon) -> int:
    """(n_P - 1)(ceil(2*pi/theta_min) - 1) for any convex polygon."""
    return (len(poly.vertices) - 1) * (full_turn_ceiling(poly) - 1)


def incidence_tree(cells: CellSet) -> IncidenceGraph:
    """Piece/contact-point graph of a cell set, checked to be a tree.

    Contacts are found by hashing cell vertices, which is exact once the
    depth-1 pieces meet only in common vertices.
    """
    inc = vertex_incidence(cells)
    contacts = sorted(
        ((p, idx) for p, idx in inc.items() if len(idx) >= 2), key=lambda t: t[0].sort_key()
    )
    graph = IncidenceGraph([c.index for c in cells], contacts)
    if not graph.is_tree():
        raise NotATree(f"depth-{cells.depth} incidence graph is not a tree")
    return graph


def require_symmetric_regular(system: PolygonalSystem) -> tuple[SymmetryGroup, SymmetryAction]:
    """Preconditions shared by the main-tree operations."""
    report = validate(system)
    if not report.passed:
        failed = [k for k, c in report.to_json().items() if not c["pass"]]
        raise ConditionViolated(f"system fails {', '.join(failed)}")
    if not system.base.is_regular():
        raise RegularityRequired("base polygon is not regular")
    group = system.group
    if group is None:
        raise SymmetryRequired("no symmetry group declared")
    if group.order != system.n or group.center != system.base.centroid():
        raise SymmetryRequired(
            f"group must contain the rotations of order {system.n} about the polygon center"
        )
    check = check_symmetry(system)
    if not check.passed:
        raise SymmetryRequired(f"system is not symmetric: counterexample {check.counterexample}")
    return group, check.action


def find_center_map(system: PolygonalSystem) -> Optional[tuple[int, Similarity]]:
    """(index, map) of the map fixing the polygon center, or None when the center is a piece vertex."""
    center = system.base.centroid()
    pieces = system.pieces()
    for i, piece in enumerate(pieces):
        where = locate(center, piece)
        if where.kind is LocationKind.INTERIOR:
            s = system.maps[i]
            if s(center) != center:
                raise ChainNotFound(f"piece {i + 1} contains the center but its map moves it")
            if system.group is not None and piece.image(system.group.rotation) != piece:
                raise ChainNotFound(f"center piece {i + 1} is not rotation invariant")
            return i, s
        if where.kind is LocationKind.VERTEX:
            return None
        if where.kind is LocationKind.EDGE_INTERIOR:
            raise ChainNotFound(f"center lies inside an edge of piece {i + 1}")
    raise ChainNotFound("no piece contains the polygon center")


@dataclass
class Arc:
    vertex: int
    polyline: list[Scalar]
    nodes: list = field(default_factory=list)

    @property
    def collinear(self) -> bool:
        a, b = self.polyline[0], self.polyline[-1]
        return all(orient(a, b, p) == 0 for p in self.polyline)

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex + 1,
            "polyline": [p.literal() for p in self.polyline],
            "collinear": self.collinear,
        }


@dataclass
class MainTree:
    """Abstract n-pod: node ``"O"`` joined to each vertex node ``k`` by arc k."""

    center: Scalar
    vertices: tuple[Scalar, ...]
    arcs: list[Arc]
    depth: int
    straight: bool

    @property
    def nodes(self) -> list:
        return ["O"] + list(range(len(self.vertices)))

    @property
    def edges(self) -> list[tuple]:
        return [("O", arc.vertex) for arc in self.arcs]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, node) -> int:
        return sum(node in e for e in self.edges)

    def is_tree(self) -> bool:
        return self.edge_count == len(self.nodes) - 1 and all(self.degree(v) >= 1 for v in self.nodes)

    def permuted(self, perm: dict[int, int]) -> set[tuple]:
        """Edge set after relabeling vertex nodes."""
        return {(a, perm[b]) for a, b in self.edges}

    def to_json(self) -> dict:
        return {
            "center": self.center.literal(),
            "depth": self.depth,
            "edge_count": self.edge_count,
            "degree_center": self.degree("O"),
            "straight_arcs": self.straight,
            "arcs": [a.to_json() for a in self.arcs],
        }


def _center_node(system: PolygonalSystem, depth: int, graph: IncidenceGraph):
    center = system.base.centroid()
    found = find_center_map(system)
    if found is not None:
        return ("piece", (found[0],) * depth)
    node = ("point", center)
    if node not in graph.graph:
        raise ChainNotFound("the center is not a contact point")
    return node


def main_tree(system: PolygonalSystem, depth: int = 1) -> MainTree:
    """The n-pod with depth-``depth`` contact-point polylines for each arc."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    group, _ = require_symmetric_regular(system)
    cells = approximate(system, depth)
    graph = incidence_tree(cells)
    center = system.base.centroid()
    start = _center_node(system, depth, graph)
    inc = vertex_incidence(cells)
    arcs = []
    for k, a in enumerate(system.base.vertices):
        owners = inc.get(a, [])
        if len(owners) != 1:
            raise ChainNotFound(f"vertex {k + 1} lies in {len(owners)} cells")
        path = graph.path(start, ("piece", owners[0]))
        line = [center] + [v[1] for v in path if v[0] == "point" and v[1] != center] + [a]
        arcs.append(Arc(k, line, path))
    for x in range(len(arcs)):
        for y in range(x + 1, len(arcs)):
            shared = set(arcs[x].nodes) & set(arcs[y].nodes)
            if shared != {start}:
                labels = sorted(node_label(v) for v in shared - {start})
                raise NotATree(f"arcs {x + 1} and {y + 1} share {labels}")
    tree = MainTree(center, system.base.vertices, arcs, depth, group.dihedral)
    if tree.straight and not all(a.collinear for a in arcs):
        raise ConditionViolated("dihedral symmetry but an arc polyline is not straight")
    return tree


class PointClass(enum.Enum):
    END = "end"
    CUT = "cut"
    RAMIFICATION = "ramification"


@dataclass(frozen=True)
class PointClassification:
    point: Scalar
    kind: PointClass
    order: int
    index: str
    base: str
    """"O", a vertex name "A<k>", or the literal of the depth-1 contact point."""

    def to_json(self) -> dict:
        return {
            "point": self.point.literal(),
            "class": self.kind.value,
            "order": self.order,
            "provenance": {"index": self.index, "base": self.base},
        }


def classify_points(system: PolygonalSystem, depth: int) -> list[PointClassification]:
    """End points, images of O and contact points up to ``depth``, with orders."""
    require_symmetric_regular(system)
    n = system.n
    bound = ramification_bound(n)
    center = system.base.centroid()
    out: list[PointClassification] = [
        PointClassification(a, PointClass.END, 1, "", f"A{k + 1}")
        for k, a in enumerate(system.base.vertices)
    ]
    known = set(system.base.vertices)
    levels = [base_cells(system)]
    for _ in range(depth):
        levels.append(hutchinson_step(levels[-1], system))
    for cells in levels:
        for c in cells:
            y = c.map(center)
            if y not in known:
                known.add(y)
                out.append(PointClassification(y, PointClass.RAMIFICATION, n, c.label, "O"))
    for cells in levels[1:]:
        lookup = {c.index: c for c in cells}
        for y, owners in vertex_incidence(cells).items():
            if len(owners) < 2 or y in known:
                continue
            known.add(y)
            parent = owners[0][:-1]
            if any(o[:-1] != parent for o in owners):
                raise ConditionViolated(f"contact point {y.literal()} spans different parent cells")
            cell = lookup[owners[0]]
            l = next(l for l, v in enumerate(system.base.vertices) if cell.map(v) == y)
            x = system.maps[owners[0][-1]](system.base.vertices[l])
            s, _ = preimage_count(system, x)
            if s != len(owners):
                raise ConditionViolated(
                    f"contact point {y.literal()}: {len(owners)} cells but preimage count {s}"
                )
            kind = PointClass.RAMIFICATION if s >= 3 else PointClass.CUT
            out.append(PointClassification(y, kind, s, index_string(parent), x.literal()))
    for p in out:
        if p.base not in ("O",) and p.kind is not PointClass.END and p.order > bound:
            raise ConditionViolated(f"order {p.order} at {p.point.literal()} exceeds bound {bound}")
        if n >= 6 and p.kind is PointClass.RAMIFICATION and p.base != "O":
            raise ConditionViolated(f"ramification point {p.point.literal()} is not an image of O")
    return out
