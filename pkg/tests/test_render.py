import xml.etree.ElementTree as ET
from pathlib import Path

from polydendrite.attractor import CellSet, approximate
from polydendrite.render import chaos_points, orbit_colors, render_chaos_svg, render_svg
from polydendrite.symmetry import check_symmetry, map_orbits

GOLDEN = Path(__file__).parent / "golden" / "vicsek_depth4.svg"
NS = "{http://www.w3.org/2000/svg}"


def paths(svg: str):
    return ET.fromstring(svg.encode()).iter(NS + "path")


def test_golden_depth4(vicsek):
    svg = render_svg(approximate(vicsek, 4))
    assert svg == GOLDEN.read_text()
    assert len(list(paths(svg))) == 625


def test_depth_zero_and_empty(vicsek):
    assert len(list(paths(render_svg(approximate(vicsek, 0))))) == 1
    assert len(list(paths(render_svg(CellSet(0, []))))) == 0


def test_y_axis_points_up(vicsek):
    svg = render_svg(approximate(vicsek, 1))
    first = next(paths(svg)).get("d")  # corner cell at the origin sits at the bottom
    ys = [float(tok) for k, tok in enumerate(first.replace("M", "").replace("L", "").replace("Z", "").split()) if k % 2]
    assert min(ys) > 256


def test_fill_by_orbit(vicsek):
    cells = approximate(vicsek, 1)
    colors = orbit_colors(cells, map_orbits(check_symmetry(vicsek).action))
    assert len(set(colors[:4])) == 1 and colors[4] != colors[0]
    fills = [p.get("fill") for p in paths(render_svg(cells, colors=colors))]
    assert fills == colors


def test_chaos_is_seeded(vicsek):
    assert chaos_points(vicsek, 50, seed=3) == chaos_points(vicsek, 50, seed=3)
    assert chaos_points(vicsek, 50, seed=3) != chaos_points(vicsek, 50, seed=4)
    svg = render_chaos_svg(vicsek, 200, seed=1)
    assert svg == render_chaos_svg(vicsek, 200, seed=1)
    for x, y in chaos_points(vicsek, 500):
        assert -1e-9 <= x <= 1 + 1e-9 and -1e-9 <= y <= 1 + 1e-9
