"""SVG output for cell sets and chaos-game point clouds.

Output is deterministic: coordinates are printed with six decimals, cells
appear in multiindex order and the chaos game uses a seeded generator.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .attractor import CellSet
from .system import PolygonalSystem

PALETTE = ("#3e7cb1", "#e07a5f", "#81b29a", "#f2cc8f", "#9d6fb0", "#5fa8a8", "#c8553d", "#6d6875")


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Frame:
    """Maps field points to SVG user coordinates with the y axis pointing up."""

    def __init__(self, points: Sequence[tuple[float, float]], size: int, margin: int) -> None:
        xs = [p[0] for p in points] or [0.0, 1.0]
        ys = [p[1] for p in points] or [0.0, 1.0]
        self.x0, self.y1 = min(xs), max(ys)
        span = max(max(xs) - self.x0, self.y1 - min(ys)) or 1.0
        self.scale = (size - 2 * margin) / span
        self.margin = margin
        self.width = _fmt(2 * margin + (max(xs) - self.x0) * self.scale)
        self.height = _fmt(2 * margin + (self.y1 - min(ys)) * self.scale)

    def __call__(self, p: tuple[float, float]) -> str:
        x = self.margin + (p[0] - self.x0) * self.scale
        y = self.margin + (self.y1 - p[1]) * self.scale
        return f"{_fmt(x)} {_fmt(y)}"


def _header(frame: _Frame, background: Optional[str]) -> list[str]:
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{frame.width}" height="{frame.height}" viewBox="0 0 {frame.width} {frame.height}">',
    ]
    if background:
        out.append(f'<rect x="0" y="0" width="{frame.width}" height="{frame.height}" fill="{background}"/>')
    return out


def render_svg(
    cells: CellSet,
    *,
    size: int = 512,
    margin: int = 8,
    fill: str = PALETTE[0],
    stroke: str = "#1f2933",
    stroke_width: float = 0.5,
    colors: Optional[Sequence[str]] = None,
    background: Optional[str] = "#ffffff",
) -> str:
    """One closed path per cell; ``colors`` overrides ``fill`` cell by cell."""
    polys = [[v.approx() for v in c.image.vertices] for c in cells]
    frame = _Frame([p for poly in polys for p in poly], size, margin)
    out = _header(frame, background)
    out.append(f'<g stroke="{stroke}" stroke-width="{_fmt(stroke_width)}" stroke-linejoin="round">')
    for k, (cell, poly) in enumerate(zip(cells, polys)):
        d = "M " + " L ".join(frame(p) for p in poly) + " Z"
        color = colors[k] if colors is not None else fill
        out.append(f'<path id="c{cell.label or "0"}" d="{d}" fill="{color}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def orbit_colors(cells: CellSet, orbits: Sequence[Sequence[int]]) -> list[str]:
    """Color each cell by the orbit of its first map under the symmetry action."""
    which = {i: k for k, orbit in enumerate(orbits) for i in orbit}
    return [PALETTE[which[c.index[0]] % len(PALETTE)] if c.index else PALETTE[0] for c in cells]


def chaos_points(system: PolygonalSystem, count: int, seed: int = 0, burn_in: int = 20) -> list[tuple[float, float]]:
    """Random-iteration samples of the attractor, in floating point."""
    rng = random.Random(seed)
    maps = [(complex(s.a), complex(s.b), s.mirror) for s in system.maps]
    z = complex(system.base.vertices[0])
    out = []
    for step in range(count + burn_in):
        a, b, mirror = maps[rng.randrange(len(maps))]
        z = a * (z.conjugate() if mirror else z) + b
        if step >= burn_in:
            out.append((z.real, z.imag))
    return out


def render_chaos_svg(
    system: PolygonalSystem,
    count: int = 20000,
    seed: int = 0,
    *,
    size: int = 512,
    margin: int = 8,
    dot: float = 0.75,
    fill: str = "#1f2933",
    background: Optional[str] = "#ffffff",
) -> str:
    pts = chaos_points(system, count, seed)
    frame = _Frame([v.approx() for v in system.base.vertices], size, margin)
    out = _header(frame, background)
    w = _fmt(dot)
    d = " ".join(f"M {frame(p)} h {w} v {w} h -{w} Z" for p in pts)
    out.append(f'<path d="{d}" fill="{fill}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
