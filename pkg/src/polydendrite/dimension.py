"""Similarity dimension from the Moran equation sum(r_i^d) = 1.

The pieces of a valid system meet only in points inside P, so the open set
condition holds and the similarity dimension is the Hausdorff dimension of
the attractor.  The same goes for the arc zippers of the main tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import mpmath

from .geometry import Similarity
from .system import PolygonalSystem
from .zipper import JordanVerdict, extract_arc_zipper, jordan_check

DEFAULT_TOL = 1e-12


def moran_sum(ratios: Sequence[float], d: float) -> float:
    return math.fsum(r**d for r in ratios)


def moran_residual(ratios: Sequence[float], d: float) -> float:
    return abs(moran_sum(ratios, d) - 1.0)


def similarity_dimension(ratios: Sequence[float], tol: float = DEFAULT_TOL) -> float:
    """The unique d >= 0 with sum(r_i^d) = 1, to residual below ``tol``.

    Bisection on [0, ln m / ln(1/max r) + 1] followed by at most five
    Newton steps kept inside the bracket.
    """
    rs = [float(r) for r in ratios]
    if not rs:
        raise ValueError("need at least one ratio")
    if any(not 0.0 < r < 1.0 for r in rs):
        raise ValueError("ratios must lie in (0, 1)")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if len(rs) == 1:
        return 0.0
    lo, hi = 0.0, math.log(len(rs)) / math.log(1.0 / max(rs)) + 1.0
    f = lambda d: moran_sum(rs, d) - 1.0  # noqa: E731  strictly decreasing
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    d = 0.5 * (lo + hi)
    for _ in range(5):
        val = f(d)
        if val == 0:
            break
        slope = math.fsum(r**d * math.log(r) for r in rs)
        step = d - val / slope
        if not lo <= step <= hi:
            break
        d = step
    if abs(f(d)) >= tol:
        raise ArithmeticError(f"Moran residual {abs(f(d))} not below {tol}")
    return d


def ratio_enclosure(sim: Similarity, prec: int = 128) -> tuple[float, float]:
    """Outward-rounded float interval around |a|, from the exact |a|^2."""
    enclosure = sim.ratio2().real_interval(prec)
    with mpmath.workprec(prec):
        lo = float(mpmath.sqrt(enclosure.a))
        hi = float(mpmath.sqrt(enclosure.b))
    # float() rounds to nearest; step one ulp outward
    return math.nextafter(lo, 0.0), math.nextafter(hi, math.inf)


def certified_ratios(maps: Sequence[Similarity], tol: float = DEFAULT_TOL) -> list[float]:
    out = []
    for k, s in enumerate(maps):
        lo, hi = ratio_enclosure(s)
        if hi - lo >= tol / 10:
            raise ArithmeticError(f"ratio of map {k + 1} not pinned down to {tol / 10}")
        out.append(0.5 * (lo + hi))
    return out


@dataclass
class DimensionReport:
    dim_k: float
    dim_main_tree: float
    residual_k: float
    residual_main_tree: float
    tol: float
    jordan: Optional[JordanVerdict] = None

    @property
    def equal(self) -> bool:
        return abs(self.dim_k - self.dim_main_tree) <= self.tol

    def to_json(self) -> dict:
        return {
            "dim_K": self.dim_k,
            "dim_main_tree": self.dim_main_tree,
            "equal": self.equal,
            "residuals": {"K": self.residual_k, "main_tree": self.residual_main_tree},
            "tol": self.tol,
            "zipper_jordan": self.jordan.to_json() if self.jordan else None,
        }


def dimension_report(system: PolygonalSystem, tol: float = DEFAULT_TOL, arc: Optional[int] = None) -> DimensionReport:
    """Dimensions of K and of the main tree (one arc suffices: the arcs are congruent)."""
    rk = certified_ratios(system.maps, tol)
    dk = similarity_dimension(rk, tol)
    z = extract_arc_zipper(system, arc)
    rt = certified_ratios(z.maps, tol)
    dt = similarity_dimension(rt, tol)
    if dt > dk + tol:
        raise ArithmeticError(f"main tree dimension {dt} exceeds dim K {dk}")
    return DimensionReport(dk, dt, moran_residual(rk, dk), moran_residual(rt, dt), tol, jordan_check(z))
