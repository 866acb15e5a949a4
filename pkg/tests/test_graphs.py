"""Graph structure, recognizers, and the compact-realizability classifier."""

import random

import pytest

from sightlines import (
    CONSTRUCTIBLE,
    REFUTED,
    UNKNOWN,
    Graph,
    bridge_or_triangle_violations,
    bridges,
    classify_compact,
    contains_k4,
    edges_in_triangles,
    graph_to_dot,
    is_connected,
    is_planar,
    is_tree,
    make_graph,
    parse_graph_text,
    planar_or_k4,
    recognize_k11n,
    simplicial_reduce,
)
from sightlines.graphs import is_simplicial

import oracles


def cycle(names):
    return make_graph(names, list(zip(names, names[1:] + names[:1])))


def complete(names):
    return make_graph(
        names, [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    )


def k11n(n: int) -> Graph:
    teeth = [f"w{i}" for i in range(n)]
    edges = [("u", "v")] + [("u", w) for w in teeth] + [("v", w) for w in teeth]
    return make_graph(["u", "v"] + teeth, edges)


K4 = complete(["a", "b", "c", "d"])
K5 = complete(["a", "b", "c", "d", "e"])
K33 = make_graph(
    ["a", "b", "c", "x", "y", "z"],
    [(u, w) for u in "abc" for w in "xyz"],
)
PETERSEN = make_graph(
    [f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)],
    [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    + [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    + [(f"o{i}", f"i{i}") for i in range(5)],
)


# Structure and normalization.


def test_graph_rejects_malformed_input():
    with pytest.raises(ValueError, match="duplicate vertex"):
        Graph(("a", "a"), frozenset())
    with pytest.raises(ValueError, match="self-loop"):
        make_graph(["a"], [("a", "a")])
    with pytest.raises(ValueError, match="unknown vertex"):
        make_graph(["a"], [("a", "b")])
    with pytest.raises(ValueError, match="not name-sorted"):
        Graph(("a", "b"), frozenset({("b", "a")}))


def test_make_graph_normalizes_edge_order():
    g = make_graph(["b", "a"], [("b", "a")])
    assert g.edges == frozenset({("a", "b")})
    assert g.has_edge("a", "b") and g.has_edge("b", "a")


def test_neighbors_sorted_and_degree():
    g = make_graph(["c", "a", "b"], [("c", "a"), ("c", "b")])
    assert g.neighbors("c") == ("a", "b")
    assert g.degree("c") == 2 and g.degree("a") == 1


def test_without_and_induced():
    g = K4.without("d")
    assert sorted(g.vertices) == ["a", "b", "c"]
    assert g.m == 3
    h = K4.induced(["a", "b"])
    assert h.edges == frozenset({("a", "b")})


# Recognizers against brute force on seeded random graphs.


def test_connectivity_bridges_triangles_k4_match_brute_force():
    rng = random.Random(7)
    for _ in range(150):
        g = oracles.random_graph(rng)
        assert is_connected(g) == oracles.brute_is_connected(g)
        assert bridges(g) == oracles.brute_bridges(g)
        assert edges_in_triangles(g) == oracles.brute_triangle_edges(g)
        assert (contains_k4(g) is not None) == oracles.brute_contains_k4(g)


def test_planarity_matches_minor_search():
    rng = random.Random(11)
    for _ in range(120):
        g = oracles.random_graph(rng)
        assert is_planar(g) == oracles.brute_is_planar(g), graph_to_dot(g)


def test_planarity_fixtures():
    assert is_planar(K4)
    assert not is_planar(K5)
    assert not is_planar(K33)
    assert not is_planar(PETERSEN)
    # Disjoint unions of planar blocks stay planar.
    two = make_graph(["a", "b", "c", "x", "y", "z"], [("a", "b"), ("x", "y")])
    assert is_planar(two)


def test_contains_k4_returns_sorted_witness():
    got = contains_k4(K5)
    assert got is not None and list(got) == sorted(got)
    assert contains_k4(K33) is None


def test_planar_or_k4_fixtures():
    assert planar_or_k4(K4)
    assert planar_or_k4(K5)          # nonplanar but holds a K4
    assert not planar_or_k4(K33)
    assert not planar_or_k4(PETERSEN)


def test_bridge_or_triangle_fixtures():
    c4 = cycle(["a", "b", "c", "d"])
    assert bridge_or_triangle_violations(c4) == c4.edges
    path = make_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert bridge_or_triangle_violations(path) == set()
    bowtie = make_graph(
        ["a", "b", "c", "d", "e"],
        [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e")],
    )
    assert bridge_or_triangle_violations(bowtie) == set()


# Simplicial reduction.


def test_is_simplicial():
    assert is_simplicial(K4, "a")
    c5 = cycle(["a", "b", "c", "d", "e"])
    assert not any(is_simplicial(c5, v) for v in c5.vertices)


def test_simplicial_reduce_complete_graph_collapses():
    g, seq = simplicial_reduce(K4)
    assert g.n == 1
    assert seq == ("a", "b", "c")   # lexicographic removal order


def test_simplicial_reduce_chordless_cycle_is_stuck():
    c5 = cycle(["a", "b", "c", "d", "e"])
    g, seq = simplicial_reduce(c5)
    assert g == c5 and seq == ()


# Family recognizers.


def test_is_tree():
    assert is_tree(make_graph(["a"], []))
    assert is_tree(make_graph(["a", "b", "c"], [("a", "b"), ("b", "c")]))
    assert not is_tree(cycle(["a", "b", "c"]))
    assert not is_tree(make_graph(["a", "b"], []))   # disconnected


def test_recognize_k11n_positive():
    for n in range(6):
        got = recognize_k11n(k11n(n))
        assert got is not None
        size, tops, rest = got
        assert size == n
        assert tops == ("u", "v")
        assert len(rest) == n
    # P3 is the n=1 case with the degree-2 tooth in the middle.
    p3 = make_graph(["x", "y", "z"], [("x", "y"), ("y", "z")])
    assert recognize_k11n(p3) is None   # path, not a triangle
    assert recognize_k11n(cycle(["x", "y", "z"])) == (1, ("x", "y"), ("z",))


def test_recognize_k11n_negative():
    assert recognize_k11n(cycle(["a", "b", "c", "d"])) is None
    assert recognize_k11n(K4) is None
    # Right edge count, wrong degrees: rewire one tooth edge.
    g = make_graph(
        ["u", "v", "w0", "w1", "w2"],
        [("u", "v"), ("u", "w0"), ("v", "w0"), ("u", "w1"), ("v", "w1"),
         ("w0", "w2"), ("w1", "w2")],
    )
    assert recognize_k11n(g) is None


# Classifier verdicts (construction-free cases; built verdicts are
# exercised with the construction tests and the acceptance suite).


def test_classifier_refutes_chordless_cycle():
    got = classify_compact(cycle(["a", "b", "c", "d"]), build=False)
    assert got.verdict == REFUTED
    assert "neither a bridge nor in a triangle" in got.evidence


def test_classifier_refutes_disconnected():
    got = classify_compact(make_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]))
    assert got.verdict == REFUTED
    assert "disconnected" in got.evidence


def test_classifier_refutation_can_need_reduction_first():
    # A 4-cycle whose edges each borrow a triangle from a private apex:
    # every edge looks fine until the apexes (all simplicial) come off.
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]
    apex = {"f": ("a", "b"), "g": ("b", "c"), "h": ("c", "d"), "i": ("a", "d")}
    for x, (p, q) in apex.items():
        edges += [(x, p), (x, q)]
    g = make_graph(["a", "b", "c", "d", "f", "g", "h", "i"], edges)
    assert bridge_or_triangle_violations(g) == set()
    got = classify_compact(g, build=False)
    assert got.verdict == REFUTED
    assert "after removing simplicial" in got.evidence


def test_classifier_empty_graph_constructible():
    got = classify_compact(make_graph([], []))
    assert got.verdict == CONSTRUCTIBLE


def test_classifier_unknown_without_construction():
    got = classify_compact(make_graph(["a", "b"], [("a", "b")]), build=False)
    assert got.verdict == UNKNOWN
    assert "recognition-only" in got.evidence


def test_classifier_octahedron_unknown_without_drawing():
    # Every octahedron edge is in a triangle and no vertex is simplicial,
    # so nothing refutes it; without a caller-supplied drawing no
    # construction recipe applies either.
    octa = make_graph(
        ["a", "b", "c", "d", "x", "y"],
        [(u, w) for i, u in enumerate("abcdxy") for w in "abcdxy"[i + 1:]
         if {u, w} not in ({"a", "x"}, {"b", "y"}, {"c", "d"})],
    )
    assert all(octa.degree(v) == 4 for v in octa.vertices)
    got = classify_compact(octa)
    assert got.verdict == UNKNOWN


def test_graph_to_dot_shape():
    dot = graph_to_dot(make_graph(["a", "b"], [("a", "b")]))
    assert dot.startswith("graph")
    assert "a -- b" in dot


def test_parse_rejects_wrong_counts():
    text = "p vg 3 0\nv a\nv b\n"
    with pytest.raises(Exception):
        parse_graph_text(text)
