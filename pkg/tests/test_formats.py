"""JSON and text interchange: round trips and parse diagnostics."""

import json

import pytest

from sightlines import (
    DrawingFormatError,
    GraphFormatError,
    SceneFormatError,
    Scene,
    drawing_from_json,
    drawing_to_json,
    graph_to_text,
    make_graph,
    parse_graph_text,
    pt,
    scene_from_json,
    scene_to_json,
    witnesses_from_json,
    witnesses_to_json,
)
from sightlines.construct import PlaneDrawing
from sightlines.visibility import VisGraph, Witness

from conftest import point_region, seg_region, square_region


def sample_scene() -> Scene:
    return Scene(
        (
            square_region("a", 0, 0, side=2),
            seg_region("b", 4, 0, 5, "7/2"),
            point_region("c", "-3/2", 6),
        )
    )


# Scenes.


def test_scene_round_trip_preserves_everything():
    s = sample_scene()
    text = scene_to_json(s)
    back = scene_from_json(text, "round")
    assert back == s
    # Serialization is deterministic.
    assert scene_to_json(back) == text


def test_scene_json_fractions_survive():
    s = scene_from_json(scene_to_json(sample_scene()))
    assert s.region("b").pieces[0].b == pt(5, "7/2")
    assert s.region("c").pieces[0].at == pt("-3/2", 6)


def test_scene_rejects_float_literals():
    text = '{"regions": [{"name": "a", "pieces": [{"kind": "point", "at": [0.5, 1]}]}]}'
    with pytest.raises(SceneFormatError, match="float literal"):
        scene_from_json(text, "f.json")


def test_scene_rejects_bad_json_with_location():
    with pytest.raises(SceneFormatError, match=r"f\.json: invalid JSON at line"):
        scene_from_json('{"regions": [}', "f.json")


def test_scene_rejects_unknown_keys_and_shapes():
    with pytest.raises(SceneFormatError, match="unknown keys"):
        scene_from_json('{"regions": [], "extra": 1}')
    with pytest.raises(SceneFormatError, match="top level"):
        scene_from_json("[]")
    with pytest.raises(SceneFormatError, match="kind"):
        scene_from_json('{"regions": [{"name": "a", "pieces": [{"kind": "blob"}]}]}')


def test_scene_rejects_boolean_coordinate():
    text = '{"regions": [{"name": "a", "pieces": [{"kind": "point", "at": [true, 1]}]}]}'
    with pytest.raises(SceneFormatError, match="boolean"):
        scene_from_json(text)


# Drawings.


def test_drawing_round_trip():
    d = PlaneDrawing(
        coordinates={"u": pt(0, 0), "v": pt(4, 0), "w": pt(2, 3)},
        edges=frozenset({("u", "v"), ("v", "w"), ("u", "w")}),
    )
    back = drawing_from_json(drawing_to_json(d), "d.json")
    assert back.coordinates == d.coordinates
    assert back.edges == d.edges


def test_drawing_rejects_unknown_vertex_and_self_loop():
    with pytest.raises(DrawingFormatError, match="unknown vertex"):
        drawing_from_json('{"vertices": {"u": [0, 0]}, "edges": [["u", "x"]]}')
    with pytest.raises(DrawingFormatError, match="self-loop"):
        drawing_from_json('{"vertices": {"u": [0, 0]}, "edges": [["u", "u"]]}')


def test_drawing_normalizes_edge_order():
    d = drawing_from_json('{"vertices": {"u": [0, 0], "v": [1, 0]}, "edges": [["v", "u"]]}')
    assert d.edges == frozenset({("u", "v")})


# Graph text.


def test_graph_text_round_trip():
    g = make_graph(["x", "y", "z"], [("x", "y"), ("y", "z")])
    text = graph_to_text(g)
    assert parse_graph_text(text, "g.txt") == g


def test_graph_text_accepts_comments_and_blank_lines():
    text = "# a path\n\np vg 2 1\nv a\nv b\n\ne b a\n"
    g = parse_graph_text(text)
    assert sorted(g.vertices) == ["a", "b"]
    assert g.edges == frozenset({("a", "b")})


def test_graph_text_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError, match=r"g\.txt:3"):
        parse_graph_text("p vg 1 0\nv a\nv a\n", "g.txt")
    with pytest.raises(GraphFormatError, match=r"g\.txt:2"):
        parse_graph_text("p vg 1 1\ne a a\nv a\n", "g.txt")


def test_graph_text_header_counts_must_match():
    with pytest.raises(GraphFormatError):
        parse_graph_text("p vg 2 0\nv a\n")
    with pytest.raises(GraphFormatError):
        parse_graph_text("p vg 1 2\nv a\n")


# Witness files.


def test_witnesses_round_trip_and_normalization():
    w1 = Witness("a", "b", pt(0, 0), pt(1, 1))
    w2 = Witness("b", "c", pt(2, 0), pt(3, "1/2"))
    vg = VisGraph(
        vertices=("a", "b", "c"),
        edges=frozenset({("a", "b"), ("b", "c")}),
        witnesses={("a", "b"): w1, ("b", "c"): w2},
    )
    back = witnesses_from_json(witnesses_to_json(vg), "w.json")
    assert back == {("a", "b"): w1, ("b", "c"): w2}


def test_witnesses_reorder_swapped_names():
    text = json.dumps(
        {"edges": [{"a": "z", "b": "a", "pa": [1, 0], "pb": [0, 0]}]}
    )
    back = witnesses_from_json(text)
    w = back[("a", "z")]
    assert w.regionA == "a" and w.regionB == "z"
    assert w.a == pt(0, 0) and w.b == pt(1, 0)


def test_witnesses_reject_missing_keys():
    with pytest.raises(SceneFormatError, match="missing key"):
        witnesses_from_json('{"edges": [{"a": "x", "b": "y", "pa": [0, 0]}]}')
