from fractions import Fraction as F

import pytest

from polydendrite.attractor import (
    approximate,
    base_cells,
    cell_signature,
    cells_json,
    hutchinson_step,
    preimage_count,
)
from polydendrite.errors import DepthCapExceeded, NotACellVertex
from polydendrite.field import cyclotomic_field
from polydendrite.geometry import ConvexPolygon, Similarity, contains
from polydendrite.system import PolygonalSystem

Q4 = cyclotomic_field(4)
pt = Q4.complex_rational


def test_depth_zero(vicsek):
    cells = approximate(vicsek, 0)
    assert len(cells) == 1 and cells.cells[0].image == vicsek.base


def test_step_counts_ratios_nesting(vicsek):
    d1 = hutchinson_step(base_cells(vicsek), vicsek)
    assert len(d1) == 5
    assert all(c.map.ratio2() == Q4.rational(F(1, 9)) for c in d1)
    d2 = hutchinson_step(d1, vicsek)
    assert len(d2) == 25
    parents = {c.index: c for c in d1}
    for c in d2:
        assert c.map.ratio2() == Q4.rational(F(1, 81))
        assert contains(parents[c.index[:1]].image, c.image)
    assert [c.index for c in d2] == sorted(c.index for c in d2)


def test_area_identity(vicsek, gasket):
    for k in range(4):
        cells = approximate(vicsek, k)
        total = Q4.zero
        for c in cells:
            total = total + c.image.area()
        assert total == Q4.rational(F(5, 9) ** k)
    assert len(approximate(gasket, 2)) == 9
    q6 = gasket.field
    assert all(c.map.ratio2() == q6.rational(F(1, 16)) for c in approximate(gasket, 2))


def test_single_map_shrinks_to_fixed_point():
    base = ConvexPolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    sys_ = PolygonalSystem(base, (Similarity(Q4.rational(F(1, 2)), Q4.zero),))
    cell = approximate(sys_, 5).cells[0]
    side = (cell.image.vertices[1] - cell.image.vertices[0]).abs2()
    assert side == Q4.rational(F(1, 4**5))
    assert pt(0, 0) in cell.image.vertices


def test_preimage_count(vicsek):
    s, hits = preimage_count(vicsek, pt(F(1, 3), F(1, 3)))
    assert s == 2 and {i for i, _ in hits} == {0, 4}
    assert preimage_count(vicsek, pt(0, 0))[0] == 1
    with pytest.raises(NotACellVertex):
        preimage_count(vicsek, pt(F(1, 2), F(1, 2)))


def test_depth_cap(vicsek, monkeypatch):
    with pytest.raises(DepthCapExceeded):
        approximate(vicsek, 3, max_cells=100)
    monkeypatch.setenv("POLYDENDRITE_MAX_CELLS", "30")
    with pytest.raises(DepthCapExceeded):
        approximate(vicsek, 3)


def test_signature_is_setwise(vicsek):
    a = approximate(vicsek, 2)
    b = approximate(vicsek, 2)
    b.cells.reverse()
    assert cell_signature(a) == cell_signature(b)


def test_cells_json_labels(vicsek):
    data = cells_json(approximate(vicsek, 2))
    assert data["cells"][0]["index"] == "11"
    assert data["cells"][-1]["index"] == "55"
