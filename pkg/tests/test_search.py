import time

from polydendrite.geometry import ConvexPolygon
from polydendrite.search import (
    GridTemplate,
    cell_orbits,
    search_grid_systems,
    square_grid,
    square_group,
    triangle_grid,
    triangle_group,
)


def test_square_orbits():
    orbits = cell_orbits(square_grid(3), square_group())
    assert sorted(map(len, orbits)) == [1, 4, 4]
    assert len(orbits) == 3  # 2^3 = 8 orbit subsets including the empty one


def test_square_search_finds_vicsek(vicsek):
    start = time.perf_counter()
    found = search_grid_systems(square_grid(3), square_group())
    assert time.perf_counter() - start < 5
    assert len(found) == 1
    assert set(found[0].maps) == set(vicsek.maps)


def test_dihedral_square_search(vicsek):
    found = search_grid_systems(square_grid(3), square_group(True))
    assert [set(s.maps) for s in found] == [set(vicsek.maps)]


def test_triangle_search_is_empty():
    template = triangle_grid(2)
    assert len(template.cells) == 4
    assert search_grid_systems(template, triangle_group()) == []


def test_empty_template():
    base = square_grid(1).base
    assert search_grid_systems(GridTemplate(base, ()), square_group()) == []


def test_triangle_cells_tile():
    template = triangle_grid(3)
    total = template.base.field.zero
    for s in template.cells:
        total = total + template.base.image(s).area_form()
    assert total == template.base.area_form()
    assert isinstance(template.base, ConvexPolygon)
