"""Exhaustive search for symmetric polygonal systems on a grid of cells.

A template is a base polygon subdivided into congruent cells, one map per
cell.  Candidates are unions of whole orbits of cells under the group, so
every candidate is closed under the group action; each is kept iff it
validates and passes the symmetry check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .field import cyclotomic_field
from .geometry import ConvexPolygon, Similarity
from .symmetry import SymmetryGroup, check_symmetry
from .system import PolygonalSystem, validate


@dataclass(frozen=True)
class GridTemplate:
    base: ConvexPolygon
    cells: tuple[Similarity, ...]


def square_grid(k: int) -> GridTemplate:
    """k x k subdivision of the unit square in Q(i); cells row by row from the origin."""
    fld = cyclotomic_field(4)
    pt = fld.complex_rational
    base = ConvexPolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    a = fld.rational(Fraction(1, k))
    cells = tuple(
        Similarity(a, pt(Fraction(x, k), Fraction(y, k))) for y in range(k) for x in range(k)
    )
    return GridTemplate(base, cells)


def triangle_grid(k: int) -> GridTemplate:
    """Subdivision of the triangle 0, 1, zeta_6 into k^2 triangles.

    Upright cells are z/k + t, inverted cells -z/k + t (a half turn).
    """
    fld = cyclotomic_field(6)
    w = fld.zeta()
    base = ConvexPolygon([fld.zero, fld.one, w])
    up = fld.rational(Fraction(1, k))
    cells = []
    for b in range(k):
        for a in range(k - b):
            cells.append(Similarity(up, (w * b + a) * Fraction(1, k)))
    for b in range(k - 1):
        for a in range(k - 1 - b):
            cells.append(Similarity(-up, (w * (b + 1) + (a + 1)) * Fraction(1, k)))
    return GridTemplate(base, tuple(cells))


def square_group(dihedral: bool = False) -> SymmetryGroup:
    fld = cyclotomic_field(4)
    return SymmetryGroup(fld.complex_rational(Fraction(1, 2), Fraction(1, 2)), 4, dihedral)


def triangle_group(dihedral: bool = False) -> SymmetryGroup:
    fld = cyclotomic_field(6)
    return SymmetryGroup((fld.one + fld.zeta()) * Fraction(1, 3), 3, dihedral)


def cell_orbits(template: GridTemplate, group: SymmetryGroup) -> list[list[int]]:
    images = [template.base.image(s) for s in template.cells]
    where = {img: k for k, img in enumerate(images)}
    orbits, seen = [], set()
    for k, img in enumerate(images):
        if k in seen:
            continue
        orbit = set()
        for g in group.elements:
            moved = img.image(g)
            if moved not in where:
                raise ValueError(f"template is not closed under the group (cell {k})")
            orbit.add(where[moved])
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def search_grid_systems(template: GridTemplate, group: SymmetryGroup) -> list[PolygonalSystem]:
    """All unions of cell orbits that form valid G-symmetric systems."""
    if not template.cells:
        return []
    orbits = cell_orbits(template, group)
    found = []
    for r in range(len(orbits) + 1):
        for combo in itertools.combinations(orbits, r):
            chosen = sorted(i for orbit in combo for i in orbit)
            if not chosen:
                continue
            system = PolygonalSystem(template.base, tuple(template.cells[i] for i in chosen), group)
            if validate(system).passed and check_symmetry(system).passed:
                found.append(system)
    return found
