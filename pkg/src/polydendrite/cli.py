"""Command line front end.

Exit codes: 0 success, 1 the tool ran but a property fails (a JSON report is
still printed), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .attractor import approximate, cells_json
from .dimension import DEFAULT_TOL, dimension_report
from .errors import InputError, PropertyError
from .render import orbit_colors, render_chaos_svg, render_svg
from .search import search_grid_systems, square_grid, square_group, triangle_grid, triangle_group
from .specfile import load_spec, serialize
from .symmetry import augment, check_symmetry, map_orbits
from .system import intersection_matrix, intersection_matrix_json, validate
from .topology import classify_points, general_order_bound, main_tree, ramification_bound
from .zipper import (
    DendriteKind,
    JordanStatus,
    dendrite_criterion,
    extract_arc_zipper,
    find_segment_selections,
    jordan_check,
    segment_zipper,
)


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args):
    system = load_spec(args.spec)
    if getattr(args, "augment", False):
        system = augment(system)
    return system


def cmd_validate(args) -> int:
    system = _load(args)
    report = validate(system)
    out = {"validation": report.to_json(), "maps": system.m}
    ok = report.passed
    if report.d2.passed:
        out["intersection_matrix"] = intersection_matrix_json(intersection_matrix(system))
    if system.group is not None:
        check = check_symmetry(system)
        out["symmetry"] = {
            "group": system.group.kind,
            "order": system.group.order,
            "pass": check.passed,
            "counterexample": list(check.counterexample) if check.counterexample else None,
        }
        ok = ok and check.passed
    out["pass"] = ok
    _emit(dump(out), args.out)
    return 0 if ok else 1


def cmd_analyze(args) -> int:
    system = _load(args)
    tree = main_tree(system, args.depth)
    points = classify_points(system, args.depth)
    out = {
        "main_tree": tree.to_json(),
        "points": [p.to_json() for p in points],
        "bounds": {
            "vertex_type": ramification_bound(system.n),
            "general": general_order_bound(system.base),
        },
    }
    _emit(dump(out), args.out)
    return 0


def cmd_render(args) -> int:
    system = _load(args)
    if args.chaos:
        _emit(render_chaos_svg(system, args.chaos, args.seed), args.out)
        return 0
    cells = approximate(system, args.depth)
    if args.format == "json":
        _emit(dump(cells_json(cells)), args.out)
        return 0
    colors = None
    if args.fill_by_orbit:
        check = check_symmetry(system)
        if not check.passed:
            raise PropertyError("--fill-by-orbit needs a symmetric system")
        colors = orbit_colors(cells, map_orbits(check.action))
    _emit(render_svg(cells, colors=colors), args.out)
    return 0


def _parse_select(text: str, system) -> list:
    group = system.group
    picks = []
    for item in text.split(","):
        try:
            i, _, g = item.partition(":")
            i, g = int(i) - 1, int(g or 0)
        except ValueError:
            raise InputError(f"bad selection item {item!r}; expected MAP:ELEMENT") from None
        if not 0 <= i < system.m:
            raise InputError(f"map {i + 1} out of range")
        if group is None and g != 0:
            raise InputError("group elements need a declared group")
        size = len(group) if group is not None else 1
        if not 0 <= g < size:
            raise InputError(f"group element {g} out of range")
        picks.append((i, g))
    return picks


def cmd_zipper(args) -> int:
    system = _load(args)
    if args.arc is not None:
        z = extract_arc_zipper(system, args.arc - 1)
        verdict = jordan_check(z, args.depth)
        _emit(dump({"zipper": z.to_json(), "jordan": verdict.to_json()}), args.out)
        return 0 if verdict.status is JordanStatus.JORDAN else 1
    verts = system.base.vertices
    try:
        a, b = (verts[int(x) - 1] for x in args.segment)
    except (ValueError, IndexError):
        raise InputError("--segment takes two vertex numbers 1..n") from None
    if args.select is None:
        found, tried = find_segment_selections(system, a, b, args.max_size)
        n = len(system.group) if system.group is not None else 1
        sel = [[f"{i // n + 1}:{i % n}" for i in combo] for combo in found]
        _emit(dump({"selections": sel, "tried": tried}), args.out)
        return 0 if found else 1
    picks = _parse_select(args.select, system)
    maps = augment(system).maps if system.group is not None else system.maps
    n = len(system.group) if system.group is not None else 1
    try:
        z = segment_zipper(system, a, b, [maps[i * n + g] for i, g in picks])
    except PropertyError as exc:
        _emit(dump({"error": {"type": type(exc).__name__, "message": str(exc)}}), args.out)
        return 1
    verdict = dendrite_criterion(z, system, args.depth)
    _emit(dump({"zipper": z.to_json(), "dendrite": verdict.to_json()}), args.out)
    return 0 if verdict.kind is not DendriteKind.UNKNOWN else 1


def cmd_dims(args) -> int:
    system = _load(args)
    report = dimension_report(system, args.tolerance, None if args.arc is None else args.arc - 1)
    _emit(dump(report.to_json()), args.out)
    return 0


def cmd_search(args) -> int:
    if args.grid == "square":
        template, group = square_grid(args.k), square_group(args.group == "dihedral")
    else:
        template, group = triangle_grid(args.k), triangle_group(args.group == "dihedral")
    found = search_grid_systems(template, group)
    _emit(dump({"count": len(found), "systems": [serialize(s) for s in found]}), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polydendrite", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, augmentable=False):
        p.add_argument("spec", help="system spec file")
        p.add_argument("--out", help="write output here instead of stdout")
        if augmentable:
            p.add_argument("--augment", action="store_true", help="use the augmented system {S_i g}")

    p = sub.add_parser("validate", help="check the four conditions and the declared symmetry")
    common(p, True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="main tree and point classification")
    common(p)
    p.add_argument("--depth", type=int, default=2)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("render", help="draw the depth-k cells as SVG")
    common(p, True)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--format", choices=("svg", "json"), default="svg")
    p.add_argument("--fill-by-orbit", action="store_true")
    p.add_argument("--chaos", type=int, metavar="POINTS", help="draw a chaos-game sample instead")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("zipper", help="arc zippers and segment zippers")
    common(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--arc", type=int, metavar="K", help="zipper of the arc from the center to vertex K")
    mode.add_argument("--segment", nargs=2, metavar=("A", "B"), help="vertex numbers of the segment ends")
    p.add_argument("--select", help="MAP:ELEMENT,... maps 1-based, group elements 0-based")
    p.add_argument("--max-size", type=int, default=6, help="subset size bound when searching selections")
    p.add_argument("--depth", type=int, default=4, help="depth limit of the Jordan check")
    p.set_defaults(func=cmd_zipper)

    p = sub.add_parser("dims", help="similarity dimensions of K and of the main tree")
    common(p)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    p.add_argument("--arc", type=int, metavar="K")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("search", help="enumerate symmetric systems on a grid")
    p.add_argument("--grid", choices=("square", "triangle"), default="square")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--group", choices=("cyclic", "dihedral"), default="cyclic")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PropertyError as exc:
        _emit(dump({"error": {"type": type(exc).__name__, "message": str(exc)}}), getattr(args, "out", None))
        return 1


def main_exit() -> None:
    sys.exit(main())
