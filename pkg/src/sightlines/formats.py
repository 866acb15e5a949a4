"""JSON interchange for scenes, drawings and witness files.

Coordinates are exact: JSON integers or strings like "-7/2". Float
literals, NaN and Infinity are rejected at parse time via json hooks, so
a file that merely looks numeric cannot silently lose precision. Writers
emit the same shapes deterministically.
"""

from __future__ import annotations

import json

from .errors import DrawingFormatError, SceneFormatError
from .geometry import Point, Poly, Pt, Region, Scene, Seg
from .rationals import qstr, rat
from .visibility import VisGraph, Witness


def _loads(text: str, source: str, err):
    def bad_float(s):
        raise err(f"{source}: float literal {s!r}; coordinates must be exact "
                  "(integer or \"p/q\" string)")

    def bad_const(s):
        raise err(f"{source}: {s} is not a valid number")

    try:
        return json.loads(text, parse_float=bad_float, parse_constant=bad_const)
    except json.JSONDecodeError as exc:
        raise err(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: "
                  f"{exc.msg}") from None


def _coord(v, where: str, err):
    if type(v) is bool:
        raise err(f"{where}: boolean is not a coordinate")
    if isinstance(v, int):
        return rat(v)
    if isinstance(v, str):
        try:
            return rat(v)
        except TypeError:
            raise err(f"{where}: bad rational literal {v!r}") from None
    raise err(f"{where}: coordinate must be an integer or a \"p/q\" string")


def _point(v, where: str, err) -> Point:
    if not isinstance(v, list) or len(v) != 2:
        raise err(f"{where}: expected a [x, y] pair")
    return Point(_coord(v[0], f"{where}[0]", err), _coord(v[1], f"{where}[1]", err))


def _check_keys(obj, allowed, where: str, err):
    extra = set(obj) - set(allowed)
    if extra:
        raise err(f"{where}: unknown keys {sorted(extra)}")


def _piece(obj, where: str) -> object:
    err = SceneFormatError
    if not isinstance(obj, dict) or "kind" not in obj:
        raise err(f"{where}: expected a piece object with a \"kind\"")
    kind = obj["kind"]
    if kind == "point":
        _check_keys(obj, ("kind", "at"), where, err)
        if "at" not in obj:
            raise err(f"{where}: point piece needs \"at\"")
        return Pt(_point(obj["at"], f"{where}.at", err))
    if kind == "segment":
        _check_keys(obj, ("kind", "a", "b"), where, err)
        for k in ("a", "b"):
            if k not in obj:
                raise err(f"{where}: segment piece needs \"{k}\"")
        return Seg(_point(obj["a"], f"{where}.a", err),
                   _point(obj["b"], f"{where}.b", err))
    if kind == "polygon":
        _check_keys(obj, ("kind", "verts"), where, err)
        verts = obj.get("verts")
        if not isinstance(verts, list) or len(verts) < 3:
            raise err(f"{where}.verts: polygon needs at least 3 vertices")
        return Poly(tuple(
            _point(v, f"{where}.verts[{i}]", err) for i, v in enumerate(verts)
        ))
    raise err(f"{where}: unknown piece kind {kind!r}")


def scene_from_json(text: str, source: str = "<scene>") -> Scene:
    err = SceneFormatError
    data = _loads(text, source, err)
    if not isinstance(data, dict):
        raise err(f"{source}: top level must be an object")
    _check_keys(data, ("regions",), source, err)
    regions = data.get("regions")
    if not isinstance(regions, list):
        raise err(f"{source}: \"regions\" must be a list")
    out = []
    for i, robj in enumerate(regions):
        where = f"{source}: regions[{i}]"
        if not isinstance(robj, dict):
            raise err(f"{where}: expected an object")
        _check_keys(robj, ("name", "pieces"), where, err)
        name = robj.get("name")
        if not isinstance(name, str):
            raise err(f"{where}: \"name\" must be a string")
        pieces = robj.get("pieces")
        if not isinstance(pieces, list):
            raise err(f"{where}: \"pieces\" must be a list")
        out.append(Region(name, tuple(
            _piece(p, f"{where}.pieces[{j}]") for j, p in enumerate(pieces)
        )))
    return Scene(tuple(out))


def _point_json(p: Point):
    return [qstr(p.x), qstr(p.y)]


def _piece_json(piece):
    if isinstance(piece, Pt):
        return {"kind": "point", "at": _point_json(piece.at)}
    if isinstance(piece, Seg):
        return {"kind": "segment", "a": _point_json(piece.a), "b": _point_json(piece.b)}
    return {"kind": "polygon", "verts": [_point_json(v) for v in piece.verts]}


def scene_to_json(scene: Scene) -> str:
    data = {
        "regions": [
            {"name": r.name, "pieces": [_piece_json(p) for p in r.pieces]}
            for r in scene.regions
        ]
    }
    return json.dumps(data, indent=2) + "\n"


def drawing_from_json(text: str, source: str = "<drawing>"):
    from .construct import PlaneDrawing

    err = DrawingFormatError
    data = _loads(text, source, err)
    if not isinstance(data, dict):
        raise err(f"{source}: top level must be an object")
    _check_keys(data, ("vertices", "edges"), source, err)
    vobj = data.get("vertices")
    if not isinstance(vobj, dict):
        raise err(f"{source}: \"vertices\" must be an object of name -> [x, y]")
    coords = {}
    for name, xy in vobj.items():
        coords[name] = _point(xy, f"{source}: vertices[{name!r}]", err)
    eobj = data.get("edges")
    if not isinstance(eobj, list):
        raise err(f"{source}: \"edges\" must be a list of [name, name] pairs")
    edges = set()
    for i, pair in enumerate(eobj):
        where = f"{source}: edges[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise err(f"{where}: expected a [name, name] pair")
        a, b = pair
        for x in (a, b):
            if not isinstance(x, str) or x not in coords:
                raise err(f"{where}: unknown vertex {x!r}")
        if a == b:
            raise err(f"{where}: self-loop at {a!r}")
        edges.add((min(a, b), max(a, b)))
    return PlaneDrawing(coordinates=coords, edges=frozenset(edges))


def drawing_to_json(drawing) -> str:
    data = {
        "vertices": {
            name: _point_json(p) for name, p in sorted(drawing.coordinates.items())
        },
        "edges": [[a, b] for a, b in sorted(drawing.edges)],
    }
    return json.dumps(data, indent=2) + "\n"


def witnesses_to_json(vg: VisGraph) -> str:
    data = {
        "edges": [
            {
                "a": a,
                "b": b,
                "pa": _point_json(vg.witnesses[(a, b)].a),
                "pb": _point_json(vg.witnesses[(a, b)].b),
            }
            for a, b in sorted(vg.edges)
        ]
    }
    return json.dumps(data, indent=2) + "\n"


def witnesses_from_json(text: str, source: str = "<witnesses>"):
    err = SceneFormatError
    data = _loads(text, source, err)
    if not isinstance(data, dict) or not isinstance(data.get("edges"), list):
        raise err(f"{source}: expected an object with an \"edges\" list")
    out = {}
    for i, eobj in enumerate(data["edges"]):
        where = f"{source}: edges[{i}]"
        if not isinstance(eobj, dict):
            raise err(f"{where}: expected an object")
        _check_keys(eobj, ("a", "b", "pa", "pb"), where, err)
        for k in ("a", "b", "pa", "pb"):
            if k not in eobj:
                raise err(f"{where}: missing key \"{k}\"")
        a, b = eobj["a"], eobj["b"]
        if not isinstance(a, str) or not isinstance(b, str):
            raise err(f"{where}: \"a\" and \"b\" must be region names")
        pa = _point(eobj["pa"], f"{where}.pa", err)
        pb = _point(eobj["pb"], f"{where}.pb", err)
        if b < a:
            a, b, pa, pb = b, a, pb, pa
        out[(a, b)] = Witness(a, b, pa, pb)
    return out
