"""Exception hierarchy.

Errors split into two families so the CLI can map them onto exit codes:
``InputError`` (bad input, exit 2) and ``PropertyError`` (the tool ran and a
required property does not hold, exit 1).
"""

from __future__ import annotations


class DendriteError(Exception):
    """Base class for all package errors."""


class InputError(DendriteError):
    pass


class PropertyError(DendriteError):
    pass


class SpecSyntaxError(InputError):
    def __init__(self, line: int, col: int, message: str) -> None:
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class FieldMismatch(InputError):
    pass


class DegeneratePolygon(InputError):
    pass


class NotAContraction(InputError):
    pass


class DepthCapExceeded(InputError):
    pass


class ConditionViolated(PropertyError):
    pass


class GroupDoesNotFixPolygon(PropertyError):
    pass


class NotACellVertex(PropertyError):
    pass


class NotATree(PropertyError):
    pass


class RegularityRequired(PropertyError):
    pass


class SymmetryRequired(PropertyError):
    pass


class ChainBroken(PropertyError):
    def __init__(self, index: int, message: str = "") -> None:
        super().__init__(f"chain broken at map {index}" + (f": {message}" if message else ""))
        self.index = index


class ChainNotFound(PropertyError):
    pass


class PolylineBroken(PropertyError):
    pass


class NotSimple(PropertyError):
    pass
