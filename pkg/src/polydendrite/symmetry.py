"""Symmetry groups of the base polygon and G-symmetric systems.

A system S = {S_1..S_m} is G-symmetric when for every g in G and every S_i
there are S_j and g' in G with g o S_i = S_j o g'.  Group elements are plain
:class:`Similarity` objects with |a| = 1, so all checks reduce to exact
coefficient equality.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import TYPE_CHECKING, Optional, Sequence, Union

from .errors import DepthCapExceeded, GroupDoesNotFixPolygon, SymmetryRequired
from .field import Scalar
from .geometry import ConvexPolygon, Similarity, compose

if TYPE_CHECKING:
    from .system import PolygonalSystem


@dataclass(frozen=True)
class SymmetryGroup:
    """Cyclic group C_n or dihedral group D_n about ``center``.

    Elements are ordered rotations first, f^0 .. f^(n-1), then (dihedral
    only) r o f^0 .. r o f^(n-1), where f is rotation by 2*pi/n and r the
    reflection in the axis through the center at angle axis*pi/n.
    """

    center: Scalar
    order: int
    dihedral: bool = False
    axis: int = 0

    @property
    def field(self):
        return self.center.field

    @cached_property
    def rotation(self) -> Similarity:
        zeta = self.field.root_of_unity(self.order)
        return Similarity(zeta, self.center - zeta * self.center)

    @cached_property
    def reflection(self) -> Optional[Similarity]:
        if not self.dihedral:
            return None
        # z -> e^(2i*theta) conj(z - c) + c with theta = axis*pi/n
        u = self.field.root_of_unity(self.order, self.axis)
        return Similarity(u, self.center - u * self.center.conjugate(), True)

    @cached_property
    def elements(self) -> tuple[Similarity, ...]:
        rots = [Similarity.identity(self.field)]
        for _ in range(self.order - 1):
            rots.append(compose(self.rotation, rots[-1]))
        if not self.dihedral:
            return tuple(rots)
        return tuple(rots) + tuple(compose(self.reflection, g) for g in rots)

    @cached_property
    def _index(self) -> dict[Similarity, int]:
        return {g: k for k, g in enumerate(self.elements)}

    def index(self, g: Similarity) -> Optional[int]:
        return self._index.get(g)

    @property
    def generators(self) -> list[int]:
        gens = [1] if self.order > 1 else []
        if self.dihedral:
            gens.append(self.order)
        return gens

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def kind(self) -> str:
        return "dihedral" if self.dihedral else "cyclic"

    def fixes(self, poly: ConvexPolygon) -> bool:
        return all(poly.image(g) == poly for g in self.elements)

    def power(self, k: int) -> Similarity:
        """f^k, the rotation by 2*pi*k/n."""
        return self.elements[k % self.order]


@dataclass
class SymmetryAction:
    """Action table: ``table[g, i] = (j, g2)`` with g o S_i = S_j o g2 (all indices 0-based)."""

    group: SymmetryGroup
    table: dict[tuple[int, int], tuple[int, int]]

    def permutation(self, g: int) -> tuple[int, ...]:
        m = max(i for _, i in self.table) + 1
        return tuple(self.table[g, i][0] for i in range(m))


@dataclass
class SymmetryCheck:
    passed: bool
    action: Optional[SymmetryAction] = None
    counterexample: Optional[tuple[int, int]] = None
    """(group element index, map index) with no matching (j, g')."""


def _match(system: "PolygonalSystem", group: SymmetryGroup, g: int, i: int) -> Optional[tuple[int, int]]:
    target = compose(group.elements[g], system.maps[i])
    for j, s in enumerate(system.maps):
        for k, h in enumerate(group.elements):
            if compose(s, h) == target:
                return j, k
    return None


def brute_force_table(system: "PolygonalSystem", group: SymmetryGroup) -> dict[tuple[int, int], tuple[int, int]]:
    """Solve g o S_i = S_j o g' directly for every element g (used as a cross-check)."""
    table = {}
    for g in range(len(group)):
        for i in range(len(system.maps)):
            hit = _match(system, group, g, i)
            if hit is None:
                raise SymmetryRequired(f"no match for element {g}, map {i}")
            table[g, i] = hit
    return table


def _derive(system, group, gen_table) -> dict[tuple[int, int], tuple[int, int]]:
    # h = gen o k:  h S_i = gen S_j k' = S_l gen' k'
    m = len(system.maps)
    table = {(0, i): (i, 0) for i in range(m)}
    known = [0]
    seen = {0}
    while known:
        k = known.pop(0)
        for gen in group.generators:
            h = group.index(compose(group.elements[gen], group.elements[k]))
            if h in seen:
                continue
            for i in range(m):
                j, k2 = table[k, i]
                l, gen2 = gen_table[gen, j]
                table[h, i] = (l, group.index(compose(group.elements[gen2], group.elements[k2])))
            seen.add(h)
            known.append(h)
    return table


def check_symmetry(system: "PolygonalSystem", group: Optional[SymmetryGroup] = None) -> SymmetryCheck:
    """Decide whether ``system`` is symmetric under ``group``.

    Only generators are searched; the action of the remaining elements
    follows by composing table entries.
    """
    group = group or system.group
    if group is None:
        raise SymmetryRequired("no symmetry group declared")
    if not group.fixes(system.base):
        raise GroupDoesNotFixPolygon("a group element moves the base polygon")
    gen_table = {}
    for g in group.generators:
        for i in range(len(system.maps)):
            hit = _match(system, group, g, i)
            if hit is None:
                return SymmetryCheck(False, counterexample=(g, i))
            gen_table[g, i] = hit
    return SymmetryCheck(True, SymmetryAction(group, _derive(system, group, gen_table)))


def _require_symmetric(system, group) -> SymmetryGroup:
    group = group or system.group
    result = check_symmetry(system, group)
    if not result.passed:
        raise SymmetryRequired(f"system is not symmetric: counterexample {result.counterexample}")
    return group


def augment(system: "PolygonalSystem", group: Optional[SymmetryGroup] = None) -> "PolygonalSystem":
    """The augmented system {S_i o g}: map ``i * |G| + k`` is S_i o g_k."""
    group = _require_symmetric(system, group)
    maps = tuple(compose(s, g) for s in system.maps for g in group.elements)
    return replace(system, maps=maps)


def iterate(system: "PolygonalSystem", k: int, max_maps: Optional[int] = None) -> "PolygonalSystem":
    """S^(k) = {S_j : j in I^k}, lexicographic in j."""
    from .attractor import depth_cap

    if k < 1:
        raise ValueError("k must be positive")
    cap = depth_cap() if max_maps is None else max_maps
    if len(system.maps) ** k > cap:
        raise DepthCapExceeded(f"{len(system.maps)}^{k} maps exceed the cap {cap}")
    maps = list(system.maps)
    for _ in range(k - 1):
        maps = [compose(s, t) for s in maps for t in system.maps]
    return replace(system, maps=tuple(maps))


def twist(
    system: "PolygonalSystem",
    picks: Sequence[Union[int, Similarity]],
    group: Optional[SymmetryGroup] = None,
) -> "PolygonalSystem":
    """S' = {S_1 g_1, ..., S_m g_m}; picks are group elements or their indices."""
    group = _require_symmetric(system, group)
    if len(picks) != len(system.maps):
        raise ValueError(f"need {len(system.maps)} picks, got {len(picks)}")
    elems = [group.elements[p] if isinstance(p, int) else p for p in picks]
    return replace(system, maps=tuple(compose(s, g) for s, g in zip(system.maps, elems)))


def map_orbits(action: SymmetryAction) -> list[list[int]]:
    """Orbits of map indices under the permutations g*."""
    m = max(i for _, i in action.table) + 1
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (g, i), (j, _) in action.table.items():
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())
