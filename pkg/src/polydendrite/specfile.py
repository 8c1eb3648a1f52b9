"""Line-oriented system spec files.

::

    # Vicsek-type system on the unit square
    field 4
    polygon rat(0,0) rat(1,0) rat(1,1) rat(0,1)
    map direct a=rat(1/3,0) b=rat(0,0)
    group cyclic 4 center=rat(1/2,1/2)

Scalars are ``poly(q0, ..., q_{phi(N)-1})`` over the power basis of
Q(zeta_N) (missing trailing coefficients are zero) or ``rat(x, y)`` for
x + iy, allowed when 4 | N.  Maps are indexed in file order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .errors import DegeneratePolygon, FieldMismatch, NotAContraction, SpecSyntaxError
from .field import CyclotomicField, Scalar, cyclotomic_field
from .geometry import ConvexPolygon, Similarity
from .symmetry import SymmetryGroup
from .system import PolygonalSystem

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_WORD = re.compile(r"[A-Za-z_]+")
_INT = re.compile(r"[+-]?\d+")


class _Line:
    def __init__(self, text: str, lineno: int) -> None:
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None) -> SpecSyntaxError:
        return SpecSyntaxError(self.lineno, (self.pos if pos is None else pos) + 1, message)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def match(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m.group()

    def word(self) -> str:
        return self.match(_WORD, "a keyword")

    def integer(self) -> int:
        return int(self.match(_INT, "an integer"))

    def rational(self) -> Fraction:
        start = self.pos
        text = self.match(_RATIONAL, "a rational number")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise self.error("zero denominator", start) from None

    def scalar(self, fld: Optional[CyclotomicField]) -> Scalar:
        self.skip_ws()
        start = self.pos
        if fld is None:
            raise self.error("scalar before the 'field' line")
        kind = self.word()
        self.expect("(")
        values = [self.rational()]
        while True:
            self.skip_ws()
            if self.text.startswith(",", self.pos):
                self.pos += 1
                values.append(self.rational())
            else:
                break
        self.expect(")")
        if kind == "poly":
            try:
                return fld.element(values)
            except FieldMismatch as exc:
                raise FieldMismatch(f"line {self.lineno}, col {start + 1}: {exc}") from None
        if kind == "rat":
            if len(values) != 2:
                raise self.error("rat() takes exactly two rationals", start)
            if not fld.has_i:
                raise FieldMismatch(
                    f"line {self.lineno}, col {start + 1}: rat() needs 4 | N, field order is {fld.order}"
                )
            return fld.complex_rational(*values)
        raise self.error(f"unknown scalar form {kind!r}", start)

    def keyed_scalar(self, key: str, fld) -> Scalar:
        self.expect(key + "=")
        return self.scalar(fld)


def parse_spec(text: str) -> PolygonalSystem:
    fld: Optional[CyclotomicField] = None
    polygon = None
    maps: list[Similarity] = []
    group: Optional[SymmetryGroup] = None
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].rstrip()
        line = _Line(body, lineno)
        if line.at_end():
            continue
        start = line.pos
        keyword = line.word()
        if keyword == "field":
            if fld is not None:
                raise line.error("duplicate 'field' line", start)
            order = line.integer()
            if order < 3:
                raise line.error("field order must be at least 3", start)
            fld = cyclotomic_field(order)
        elif keyword == "polygon":
            if polygon is not None:
                raise line.error("duplicate 'polygon' line", start)
            pts = []
            while not line.at_end():
                pts.append(line.scalar(fld))
            try:
                polygon = ConvexPolygon(pts)
            except DegeneratePolygon as exc:
                raise DegeneratePolygon(f"line {lineno}: {exc}") from None
        elif keyword == "map":
            line.skip_ws()
            kind_pos = line.pos
            kind = line.word()
            if kind not in ("direct", "mirror"):
                raise line.error("expected 'direct' or 'mirror'", kind_pos)
            a = line.keyed_scalar("a", fld)
            b = line.keyed_scalar("b", fld)
            if a.is_zero():
                raise NotAContraction(f"line {lineno}: a=0 is not a similarity")
            sim = Similarity(a, b, kind == "mirror")
            if not sim.is_contraction():
                raise NotAContraction(f"line {lineno}: map is not a contraction (|a| >= 1)")
            maps.append(sim)
        elif keyword == "group":
            if group is not None:
                raise line.error("duplicate 'group' line", start)
            line.skip_ws()
            kind_pos = line.pos
            kind = line.word()
            if kind not in ("cyclic", "dihedral"):
                raise line.error("expected 'cyclic' or 'dihedral'", kind_pos)
            line.skip_ws()
            n_pos = line.pos
            n = line.integer()
            if n < 1:
                raise line.error("group order must be positive", n_pos)
            center = line.keyed_scalar("center", fld)
            axis = 0
            if kind == "dihedral":
                line.expect("axis=")
                axis = line.integer()
            try:
                fld.root_of_unity(n)
            except FieldMismatch as exc:
                raise FieldMismatch(f"line {lineno}: {exc}") from None
            group = SymmetryGroup(center, n, kind == "dihedral", axis)
        else:
            raise line.error(f"unknown keyword {keyword!r}", start)
        if not line.at_end():
            raise line.error("unexpected trailing text")
    end = len(lines) + 1
    if fld is None:
        raise SpecSyntaxError(end, 1, "missing 'field' line")
    if polygon is None:
        raise SpecSyntaxError(end, 1, "missing 'polygon' line")
    if not maps:
        raise SpecSyntaxError(end, 1, "missing 'map' lines")
    return PolygonalSystem(polygon, tuple(maps), group)


def load_spec(path) -> PolygonalSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def serialize(system: PolygonalSystem) -> str:
    """Canonical text; ``parse_spec(serialize(s)) == s``."""
    out = [f"field {system.field.order}"]
    out.append("polygon " + " ".join(v.literal() for v in system.base.vertices))
    for s in system.maps:
        kind = "mirror" if s.mirror else "direct"
        out.append(f"map {kind} a={s.a.literal()} b={s.b.literal()}")
    g = system.group
    if g is not None:
        line = f"group {g.kind} {g.order} center={g.center.literal()}"
        if g.dihedral:
            line += f" axis={g.axis}"
        out.append(line)
    return "\n".join(out) + "\n"
