"""Command-line front end.

Subcommands map one-to-one onto the library: compute, check, classify,
construct, verify, fuzz. Exit code 0 means success (property holds, diff
empty); 1 means the answer is negative (violations, nonempty diff,
refuted classification); 2 means the input could not even be read, with
a diagnostic naming the offending file and location. All output is
deterministic given the same inputs and flags.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import construct
from .errors import (
    DrawingError,
    InvalidSceneError,
    NameMismatchError,
    SightlinesError,
    UnsupportedGraphError,
    VerificationFailed,
)
from .formats import drawing_from_json, scene_from_json, scene_to_json, witnesses_to_json
from .graphs import (
    REFUTED,
    bridge_or_triangle_violations,
    classify_compact,
    graph_to_dot,
    graph_to_text,
    is_connected,
    make_graph,
    parse_graph_text,
    planar_or_k4,
)
from .harness import FuzzConfig, fuzz
from .svg import render_svg
from .visibility import compute_visibility_graph


class _InputError(Exception):
    """Wraps any failure to read or parse an input file (exit code 2)."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"{path}: cannot read: {exc.strerror or exc}") from exc


def _load_graph(path: str):
    return parse_graph_text(_read(path), source=path)


def _load_scene(path: str):
    return scene_from_json(_read(path), source=path)


def _load_drawing(path: str):
    return drawing_from_json(_read(path), source=path)


def _cmd_compute(args) -> int:
    scene = _load_scene(args.scene)
    try:
        vg = compute_visibility_graph(scene)
    except InvalidSceneError as exc:
        raise _InputError(f"{args.scene}: {exc}") from exc
    g = make_graph(sorted(vg.vertices), sorted(vg.edges))
    sys.stdout.write(graph_to_text(g))
    if args.dot:
        Path(args.dot).write_text(graph_to_dot(g))
    if args.svg:
        Path(args.svg).write_text(render_svg(scene, vg))
    if args.witnesses:
        Path(args.witnesses).write_text(witnesses_to_json(vg))
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    if args.property == "bridge-or-triangle":
        bad = sorted(bridge_or_triangle_violations(g))
        if bad:
            for a, b in bad:
                print(f"violating edge {a}-{b}: neither a bridge nor in a triangle")
            return 1
        print("property holds: every edge is a bridge or in a triangle")
        return 0
    if args.property == "planar-or-k4":
        if planar_or_k4(g):
            print("property holds: graph is planar or contains a K4")
            return 0
        print("property violated: graph is nonplanar and has no K4")
        return 1
    if is_connected(g):
        print("property holds: graph is connected")
        return 0
    print("property violated: graph is disconnected")
    return 1


def _cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    drawing = _load_drawing(args.drawing) if args.drawing else None
    c = classify_compact(g, drawing=drawing)
    print(f"{c.verdict}: {c.evidence}")
    return 1 if c.verdict == REFUTED else 0


def _cmd_construct(args) -> int:
    g = None
    if args.kind in ("tree", "triangulated"):
        g = _load_graph(args.graph)
    try:
        if args.kind == "tree":
            scene = construct.construct_tree(g)
        elif args.kind == "k11n":
            scene = construct.construct_k11n(args.n)
        else:
            drawing = _load_drawing(args.drawing)
            scene = construct.construct_triangulated(g, drawing)
    except (UnsupportedGraphError, DrawingError) as exc:
        raise _InputError(f"{args.graph if g else args.kind}: {exc}") from exc
    except VerificationFailed as exc:
        print(str(exc), file=sys.stderr)
        return 1
    Path(args.out).write_text(scene_to_json(scene))
    print(f"wrote {args.out}: {len(scene.regions)} regions")
    return 0


def _cmd_verify(args) -> int:
    scene = _load_scene(args.scene)
    g = _load_graph(args.graph)
    try:
        diff = construct.verify_roundtrip(g, scene)
    except InvalidSceneError as exc:
        raise _InputError(f"{args.scene}: {exc}") from exc
    except NameMismatchError as exc:
        raise _InputError(f"{args.scene}: {exc}") from exc
    for tag, a, b in diff:
        print(f"{tag} {a}-{b}")
    if diff:
        return 1
    print("ok: scene realizes the graph exactly")
    return 0


def _cmd_fuzz(args) -> int:
    cfg = FuzzConfig(
        iterations=args.iters, seed=args.seed, convexOnly=args.convex_only
    )
    report = fuzz(cfg, out_dir=args.out_dir)
    print(report.summary())
    return 1 if report.failures else 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sightlines",
        description="Exact visibility graphs of scenes of compact regions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="visibility graph of a scene")
    p.add_argument("scene")
    p.add_argument("--dot")
    p.add_argument("--svg")
    p.add_argument("--witnesses")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("check", help="test a necessary condition on a graph")
    p.add_argument("graph")
    p.add_argument(
        "--property",
        required=True,
        choices=["bridge-or-triangle", "planar-or-k4", "connected"],
    )
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("classify", help="decide realizability where known")
    p.add_argument("graph")
    p.add_argument("--drawing")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("construct", help="build a verified scene for a graph")
    kinds = p.add_subparsers(dest="kind", required=True)
    t = kinds.add_parser("tree")
    t.add_argument("graph")
    t.add_argument("--out", required=True)
    k = kinds.add_parser("k11n")
    k.add_argument("n", type=int)
    k.add_argument("--out", required=True)
    tr = kinds.add_parser("triangulated")
    tr.add_argument("graph")
    tr.add_argument("--drawing", required=True)
    tr.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="diff a scene's visibility graph against a target")
    p.add_argument("scene")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("fuzz", help="random-scene invariant sweep")
    p.add_argument("--iters", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--convex-only", action="store_true")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(fn=_cmd_fuzz)
    return ap


def run(argv) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage already; normalize other codes
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SightlinesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
