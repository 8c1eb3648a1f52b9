"""Polygonal systems and the four defining conditions.

For a convex polygon P and contractions S_1..S_m with pieces P_i = S_i(P):

* d1: every piece lies in P;
* d2: two distinct pieces are disjoint or meet in one common vertex;
* d3: every vertex of P is the image of a vertex of P under some map;
* d4: the union of the pieces is contractible.

Given d2, the pieces only meet in isolated points, and the union is
contractible exactly when the bipartite piece/contact-point incidence graph
is a tree.  That graph is what d4 checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Optional, Sequence

import networkx as nx

from .errors import ConditionViolated, FieldMismatch, NotAContraction
from .field import Scalar
from .geometry import (
    ConvexPolygon,
    Intersection,
    IntersectionKind,
    Similarity,
    classify_intersection,
    contains,
)
from .symmetry import SymmetryGroup


@dataclass(frozen=True)
class PolygonalSystem:
    base: ConvexPolygon
    maps: tuple[Similarity, ...]
    group: Optional[SymmetryGroup] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise ValueError("a system needs at least one map")
        fld = self.base.field
        for k, s in enumerate(self.maps):
            if s.field is not fld:
                raise FieldMismatch(f"map {k + 1} lies outside Q(zeta_{fld.order})")
        if self.group is not None and self.group.field is not fld:
            raise FieldMismatch("group center lies outside the declared field")

    @property
    def field(self):
        return self.base.field

    @property
    def m(self) -> int:
        return len(self.maps)

    @property
    def n(self) -> int:
        return len(self.base.vertices)

    def pieces(self) -> list[ConvexPolygon]:
        return [self.base.image(s) for s in self.maps]

    def check_contractions(self) -> None:
        for k, s in enumerate(self.maps):
            if not s.is_contraction():
                raise NotAContraction(f"map {k + 1} is not a contraction (|a| >= 1)")


@dataclass
class Condition:
    passed: bool
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"pass": self.passed, "witnesses": self.witnesses}


@dataclass
class ValidationReport:
    """Per-condition verdicts.  Witnesses use 1-based map and vertex labels."""

    d1: Condition
    d2: Condition
    d3: Condition
    d4: Condition

    @property
    def passed(self) -> bool:
        return self.d1.passed and self.d2.passed and self.d3.passed and self.d4.passed

    def to_json(self) -> dict:
        return {name: getattr(self, name).to_json() for name in ("d1", "d2", "d3", "d4")}


def node_label(node: tuple) -> str:
    kind, value = node
    if kind == "piece":
        return "piece:" + index_string(value)
    return "point:" + value.literal()


def index_string(index) -> str:
    """1-based multiindex text; digits run together when every letter is a single digit."""
    if isinstance(index, int):
        index = (index,)
    letters = [str(i + 1) for i in index]
    if all(len(s) == 1 for s in letters):
        return "".join(letters)
    return ".".join(letters)


class IncidenceGraph:
    """Bipartite graph of pieces and contact points.

    Nodes are ``("piece", label)`` and ``("point", Scalar)``; an edge joins a
    piece to every contact point lying on it.
    """

    def __init__(self, pieces: Iterable[Hashable], contacts: Iterable[tuple[Scalar, Sequence[Hashable]]]):
        g = nx.Graph()
        for p in pieces:
            g.add_node(("piece", p))
        for point, incident in contacts:
            g.add_node(("point", point))
            for p in incident:
                g.add_edge(("piece", p), ("point", point))
        self.graph = g

    @property
    def piece_nodes(self) -> list:
        return [v for v in self.graph if v[0] == "piece"]

    @property
    def point_nodes(self) -> list:
        return [v for v in self.graph if v[0] == "point"]

    def number_of_edges(self) -> int:
        return self.graph.number_of_edges()

    def number_of_nodes(self) -> int:
        return self.graph.number_of_nodes()

    def is_connected(self) -> bool:
        return self.graph.number_of_nodes() > 0 and nx.is_connected(self.graph)

    def is_tree(self) -> bool:
        return self.is_connected() and self.number_of_edges() == self.number_of_nodes() - 1

    def find_cycle(self) -> Optional[list]:
        try:
            edges = nx.find_cycle(self.graph)
        except nx.NetworkXNoCycle:
            return None
        return [u for u, _ in edges]

    def components(self) -> list[list]:
        return [sorted(c, key=node_label) for c in nx.connected_components(self.graph)]

    def path(self, source, target) -> list:
        return nx.shortest_path(self.graph, source, target)


def intersection_matrix(system: PolygonalSystem) -> list[list[Optional[Intersection]]]:
    """Symmetric m x m matrix of pairwise piece classifications; ``None`` on the diagonal."""
    pieces = system.pieces()
    m = len(pieces)
    mat: list[list[Optional[Intersection]]] = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            mat[i][j] = mat[j][i] = classify_intersection(pieces[i], pieces[j])
    return mat


def _d2_failures(mat) -> list[tuple[int, int]]:
    m = len(mat)
    return [
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if mat[i][j].kind is IntersectionKind.OTHER
    ]


def contact_points(
    system: PolygonalSystem, matrix=None
) -> list[tuple[Scalar, tuple[int, ...]]]:
    """Points shared by two or more pieces with their (0-based) piece indices.

    Sorted by coefficient vector so the order is reproducible.
    """
    mat = matrix if matrix is not None else intersection_matrix(system)
    bad = _d2_failures(mat)
    if bad:
        raise ConditionViolated(f"d2 fails for pieces {[(i + 1, j + 1) for i, j in bad]}")
    incident: dict[Scalar, set[int]] = {}
    m = len(mat)
    for i in range(m):
        for j in range(i + 1, m):
            if mat[i][j].is_common_vertex:
                incident.setdefault(mat[i][j].point, set()).update((i, j))
    return sorted(((p, tuple(sorted(s))) for p, s in incident.items()), key=lambda t: t[0].sort_key())


def incidence_graph(system: PolygonalSystem, matrix=None) -> IncidenceGraph:
    return IncidenceGraph(range(system.m), contact_points(system, matrix))


def validate(system: PolygonalSystem) -> ValidationReport:
    base = system.base
    pieces = system.pieces()

    d1 = [k + 1 for k, piece in enumerate(pieces) if not contains(base, piece)]

    mat = intersection_matrix(system)
    d2 = [[i + 1, j + 1] for i, j in _d2_failures(mat)]

    images = {s(v) for s in system.maps for v in base.vertices}
    d3 = [k + 1 for k, v in enumerate(base.vertices) if v not in images]

    if d2:
        d4 = Condition(False, [{"requires": "d2"}])
    else:
        graph = incidence_graph(system, mat)
        cycle = graph.find_cycle()
        if cycle is not None:
            d4 = Condition(False, [{"cycle": [node_label(v) for v in cycle]}])
        elif not graph.is_connected():
            comps = sorted(([node_label(v) for v in c] for c in graph.components()))
            d4 = Condition(False, [{"components": comps}])
        else:
            d4 = Condition(True)

    return ValidationReport(Condition(not d1, d1), Condition(not d2, d2), Condition(not d3, d3), d4)


def intersection_matrix_json(mat) -> list[list[Any]]:
    out = []
    for row in mat:
        cells = []
        for entry in row:
            if entry is None:
                cells.append(None)
            elif entry.is_common_vertex:
                cells.append({"common_vertex": entry.point.literal()})
            else:
                cells.append(entry.kind.value)
        out.append(cells)
    return out
