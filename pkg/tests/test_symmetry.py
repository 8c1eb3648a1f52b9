import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from polydendrite.attractor import approximate, cell_signature
from polydendrite.errors import GroupDoesNotFixPolygon, SymmetryRequired
from polydendrite.field import cyclotomic_field
from polydendrite.geometry import compose
from polydendrite.symmetry import (
    SymmetryGroup,
    augment,
    brute_force_table,
    check_symmetry,
    iterate,
    map_orbits,
    twist,
)
from dataclasses import replace

Q4 = cyclotomic_field(4)
pt = Q4.complex_rational


def test_group_elements(vicsek_dihedral):
    g = vicsek_dihedral.group
    assert len(g) == 8
    assert len(set(g.elements)) == 8
    for x in g.elements:
        for y in g.elements:
            assert g.index(compose(x, y)) is not None
    assert all(vicsek_dihedral.base.image(x) == vicsek_dihedral.base for x in g.elements)


def test_vicsek_cyclic_action(vicsek):
    check = check_symmetry(vicsek)
    assert check.passed
    perm = check.action.permutation(1)
    assert perm[4] == 4
    assert sorted(perm[:4]) == [0, 1, 2, 3] and all(perm[i] != i for i in range(4))
    # g' = g for every map
    assert all(check.action.table[1, i][1] == 1 for i in range(5))
    assert map_orbits(check.action) == [[0, 1, 2, 3], [4]]


def test_vicsek_dihedral_passes(vicsek_dihedral):
    assert check_symmetry(vicsek_dihedral).passed


def test_generator_table_matches_brute_force(vicsek, vicsek_dihedral, gasket):
    for system in (vicsek, vicsek_dihedral, gasket):
        check = check_symmetry(system)
        assert check.action.table == brute_force_table(system, system.group)


def test_diagonal_chain_is_not_symmetric(vicsek):
    chain = replace(vicsek, maps=(vicsek.maps[0], vicsek.maps[4], vicsek.maps[2]))
    check = check_symmetry(chain)
    assert not check.passed
    assert check.counterexample == (1, 0)


def test_group_must_fix_polygon(vicsek):
    off = SymmetryGroup(pt(F(1, 3), F(1, 2)), 4)
    with pytest.raises(GroupDoesNotFixPolygon):
        check_symmetry(vicsek, off)


def test_no_group():
    from polydendrite.geometry import ConvexPolygon, Similarity
    from polydendrite.system import PolygonalSystem

    sys_ = PolygonalSystem(ConvexPolygon([pt(0, 0), pt(1, 0), pt(0, 1)]), (Similarity(Q4.rational(F(1, 2)), Q4.zero),))
    with pytest.raises(SymmetryRequired):
        check_symmetry(sys_)


def test_augment_counts(vicsek, gasket):
    aug = augment(vicsek)
    assert aug.m == 20
    assert set(aug.pieces()) == set(vicsek.pieces())
    g_aug = augment(gasket)
    assert g_aug.m == 9 and len(set(g_aug.pieces())) == 3


def test_augment_trivial_group(vicsek):
    trivial = SymmetryGroup(pt(F(1, 2), F(1, 2)), 1)
    assert augment(vicsek, trivial).maps == vicsek.maps


def test_augment_same_cells_at_depth(vicsek):
    aug = augment(vicsek)
    for k in (1, 2):
        assert cell_signature(approximate(aug, k)) == cell_signature(approximate(vicsek, k))


def test_iterate(vicsek):
    it = iterate(vicsek, 2)
    assert it.m == 25
    assert all(s.ratio2() == Q4.rational(F(1, 81)) for s in it.maps)
    assert check_symmetry(it).passed
    assert iterate(vicsek, 1).maps == vicsek.maps


def test_twist_examples(vicsek, gasket):
    assert twist(vicsek, [0] * 5).maps == vicsek.maps
    t = twist(vicsek, [1, 2, 3, 0, 1])
    for k in (1, 2, 3):
        assert cell_signature(approximate(t, k)) == cell_signature(approximate(vicsek, k))
    tg = twist(gasket, [1, 2, 0])
    assert cell_signature(approximate(tg, 2)) == cell_signature(approximate(gasket, 2))


@given(st.lists(st.integers(0, 7), min_size=5, max_size=5))
def test_twist_invariance_dihedral(vicsek_dihedral, picks):
    t = twist(vicsek_dihedral, picks)
    assert cell_signature(approximate(t, 2)) == cell_signature(approximate(vicsek_dihedral, 2))


@pytest.mark.parametrize("depth", [1, 2, 3])
def test_group_fixes_cell_sets(vicsek_dihedral, depth):
    cells = approximate(vicsek_dihedral, depth)
    images = {c.image for c in cells}
    for g in vicsek_dihedral.group.elements:
        assert {p.image(g) for p in images} == images


def test_cocycle(vicsek_dihedral):
    group = vicsek_dihedral.group
    table = check_symmetry(vicsek_dihedral).action.table
    for g in range(len(group)):
        for h in range(len(group)):
            gh = group.index(compose(group.elements[g], group.elements[h]))
            for i in range(vicsek_dihedral.m):
                j, h2 = table[h, i]
                l, g2 = table[g, j]
                assert table[gh, i] == (l, group.index(compose(group.elements[g2], group.elements[h2])))
