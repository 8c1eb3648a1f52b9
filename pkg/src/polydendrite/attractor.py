"""Cell approximations of the attractor.

The depth-k cell set holds every image P_j = S_j(P), j in I^k.  Its union
is T^k(P) for the Hutchinson operator T(A) = S_1(A) u ... u S_m(A); the sets
are nested and shrink to the attractor K.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .errors import DepthCapExceeded, NotACellVertex
from .field import Scalar
from .geometry import ConvexPolygon, Similarity, compose
from .system import PolygonalSystem, index_string

DEFAULT_MAX_CELLS = 10**6
MAX_CELLS_ENV = "POLYDENDRITE_MAX_CELLS"


def depth_cap() -> int:
    value = os.environ.get(MAX_CELLS_ENV)
    return int(value) if value else DEFAULT_MAX_CELLS


@dataclass(frozen=True)
class Cell:
    index: tuple[int, ...]
    map: Similarity
    image: ConvexPolygon

    @property
    def depth(self) -> int:
        return len(self.index)

    @property
    def label(self) -> str:
        return index_string(self.index)


@dataclass
class CellSet:
    depth: int
    cells: list[Cell]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def images(self) -> list[ConvexPolygon]:
        return [c.image for c in self.cells]


def base_cells(system: PolygonalSystem) -> CellSet:
    ident = Similarity.identity(system.field)
    return CellSet(0, [Cell((), ident, system.base)])


def hutchinson_step(cells: CellSet, system: PolygonalSystem, max_cells: Optional[int] = None) -> CellSet:
    """Depth k+1 from depth k: child (j, i) has map S_j o S_i."""
    cap = depth_cap() if max_cells is None else max_cells
    if len(cells) * system.m > cap:
        raise DepthCapExceeded(f"{len(cells) * system.m} cells exceed the cap {cap}")
    base = system.base
    out = []
    for cell in cells.cells:
        for i, s in enumerate(system.maps):
            sim = compose(cell.map, s)
            out.append(Cell(cell.index + (i,), sim, base.image(sim)))
    return CellSet(cells.depth + 1, out)


def approximate(system: PolygonalSystem, depth: int, max_cells: Optional[int] = None) -> CellSet:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    cap = depth_cap() if max_cells is None else max_cells
    if system.m**depth > cap:
        raise DepthCapExceeded(f"{system.m}^{depth} cells exceed the cap {cap}")
    cells = base_cells(system)
    for _ in range(depth):
        cells = hutchinson_step(cells, system, cap)
    return cells


def preimage_count(system: PolygonalSystem, x: Scalar) -> tuple[int, list[tuple[int, int]]]:
    """s = #{i : x in S_i(V_P)} with the (map, vertex) witnesses, 0-based."""
    hits = [
        (i, l)
        for i, s in enumerate(system.maps)
        for l, v in enumerate(system.base.vertices)
        if s(v) == x
    ]
    if not hits:
        raise NotACellVertex(f"{x.literal()} is not a vertex of a depth-1 cell")
    return len({i for i, _ in hits}), hits


def cell_signature(cells: CellSet) -> bytes:
    """Setwise serialization of the cell images: distinct canonical polygons, sorted, one per line."""
    lines = sorted({c.image.canonical() for c in cells.cells})
    return ("\n".join(lines) + "\n").encode()


def cells_json(cells: CellSet) -> dict:
    return {
        "depth": cells.depth,
        "cells": [
            {"index": c.label, "vertices": [v.literal() for v in c.image.vertices]}
            for c in cells.cells
        ],
    }


def vertex_incidence(cells: CellSet) -> dict[Scalar, list[tuple[int, ...]]]:
    """Map each cell vertex to the indices of the cells having it as a vertex."""
    table: dict[Scalar, list[tuple[int, ...]]] = {}
    for c in cells.cells:
        for v in c.image.vertices:
            table.setdefault(v, []).append(c.index)
    return table
