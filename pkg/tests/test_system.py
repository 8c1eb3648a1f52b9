from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import raster_topology, shapely_relation
from polydendrite.errors import ConditionViolated, FieldMismatch
from polydendrite.field import cyclotomic_field
from polydendrite.geometry import ConvexPolygon, IntersectionKind, Similarity
from polydendrite.system import (
    PolygonalSystem,
    contact_points,
    incidence_graph,
    index_string,
    intersection_matrix,
    validate,
)

Q4 = cyclotomic_field(4)
pt = Q4.complex_rational


def test_vicsek_passes(vicsek):
    report = validate(vicsek)
    assert report.passed
    mat = intersection_matrix(vicsek)
    vertex_pairs = [(i, j) for i in range(5) for j in range(i + 1, 5) if mat[i][j].is_common_vertex]
    assert len(vertex_pairs) == 4
    assert all(j == 4 for _, j in vertex_pairs)


def test_vicsek_contacts(vicsek):
    contacts = contact_points(vicsek)
    assert [p for p, _ in contacts] == sorted(
        [pt(F(1, 3), F(1, 3)), pt(F(2, 3), F(1, 3)), pt(F(2, 3), F(2, 3)), pt(F(1, 3), F(2, 3))],
        key=lambda p: p.sort_key(),
    )
    assert all(len(owners) == 2 and 4 in owners for _, owners in contacts)


def test_gasket_cycle(gasket):
    report = validate(gasket)
    assert report.d1.passed and report.d2.passed and report.d3.passed
    assert not report.d4.passed
    cycle = report.d4.witnesses[0]["cycle"]
    assert len(cycle) == 6
    assert sum(v.startswith("piece:") for v in cycle) == 3


def test_missing_center_disconnects(vicsek_no_center):
    report = validate(vicsek_no_center)
    assert not report.d4.passed
    comps = report.d4.witnesses[0]["components"]
    assert len(comps) == 4 and all(len(c) == 1 for c in comps)


def test_d1_and_d3_witnesses():
    base = ConvexPolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    third = Q4.rational(F(1, 3))
    sys_ = PolygonalSystem(base, (Similarity(third, pt(F(5, 6), 0)), Similarity(third, pt(0, 0))))
    report = validate(sys_)
    assert report.d1.witnesses == [1]
    assert report.d3.witnesses == [2, 3, 4]


def test_overlap_reports_d2_and_blocks_d4():
    base = ConvexPolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    half = Q4.rational(F(1, 2))
    sys_ = PolygonalSystem(base, (Similarity(half, pt(0, 0)), Similarity(half, pt(F(1, 4), 0))))
    report = validate(sys_)
    assert report.d2.witnesses == [[1, 2]]
    assert report.d4.witnesses == [{"requires": "d2"}]
    with pytest.raises(ConditionViolated):
        contact_points(sys_)


def test_field_mismatch():
    base = ConvexPolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    q6 = cyclotomic_field(6)
    with pytest.raises(FieldMismatch):
        PolygonalSystem(base, (Similarity(q6.rational(F(1, 2)), q6.zero),))


def test_index_string():
    assert index_string((0, 4, 2)) == "153"
    assert index_string((9, 0)) == "10.1"
    assert index_string(3) == "4"


@pytest.mark.parametrize("name", ["vicsek", "gasket", "vicsek_no_center", "vicsek_dihedral"])
def test_d4_matches_raster_oracle(name, request):
    system = request.getfixturevalue(name)
    components, holes = raster_topology(system.pieces())
    assert validate(system).d4.passed == (components == 1 and holes == 0)


def test_matrix_matches_shapely(gasket):
    # gasket coordinates are dyadic in the basis; evaluate through the oracle
    mat = intersection_matrix(gasket)
    pieces = gasket.pieces()
    for i in range(3):
        for j in range(i + 1, 3):
            assert mat[i][j].kind.value == shapely_relation(pieces[i], pieces[j])


# random corner subsets of the 3x3 grid with and without the center
cells = [(x, y) for y in range(3) for x in range(3)]


@given(st.sets(st.sampled_from(cells), min_size=1))
def test_d4_oracle_on_grid_subsets(chosen):
    base = ConvexPolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    third = Q4.rational(F(1, 3))
    maps = tuple(Similarity(third, pt(F(x, 3), F(y, 3))) for x, y in sorted(chosen))
    system = PolygonalSystem(base, maps)
    report = validate(system)
    if not report.d2.passed:
        return
    components, holes = raster_topology(system.pieces(), resolution=240)
    assert report.d4.passed == (components == 1 and holes == 0)
    graph = incidence_graph(system)
    assert graph.is_tree() == report.d4.passed
