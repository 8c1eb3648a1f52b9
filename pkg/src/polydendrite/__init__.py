"""Exact computations for attractors of symmetric polygonal systems."""

from .attractor import CellSet, approximate, cell_signature, preimage_count
from .dimension import dimension_report, similarity_dimension
from .errors import DendriteError, InputError, PropertyError
from .field import CyclotomicField, Scalar, cyclotomic_field
from .geometry import ConvexPolygon, Segment, Similarity, classify_intersection, compose
from .specfile import load_spec, parse_spec, serialize
from .symmetry import SymmetryGroup, augment, check_symmetry, iterate, twist
from .system import PolygonalSystem, validate
from .topology import classify_points, find_center_map, main_tree, ramification_bound
from .zipper import (
    Zipper,
    dendrite_criterion,
    extract_arc_zipper,
    jordan_check,
    segment_zipper,
    verify_zipper,
)

__all__ = [
    "CellSet",
    "ConvexPolygon",
    "CyclotomicField",
    "DendriteError",
    "InputError",
    "PolygonalSystem",
    "PropertyError",
    "Scalar",
    "Segment",
    "Similarity",
    "SymmetryGroup",
    "Zipper",
    "approximate",
    "augment",
    "cell_signature",
    "check_symmetry",
    "classify_intersection",
    "classify_points",
    "compose",
    "cyclotomic_field",
    "dendrite_criterion",
    "dimension_report",
    "extract_arc_zipper",
    "find_center_map",
    "iterate",
    "jordan_check",
    "load_spec",
    "main_tree",
    "parse_spec",
    "preimage_count",
    "ramification_bound",
    "segment_zipper",
    "serialize",
    "similarity_dimension",
    "twist",
    "validate",
    "verify_zipper",
]
