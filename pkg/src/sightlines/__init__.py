"""Exact visibility graphs of planar scenes of disjoint compact regions.

Scenes are finite unions of rational points, segments, and convex
polygons. The package computes their visibility graphs exactly (every
reported edge carries a verified witness sightline), checks necessary
conditions on abstract graphs, and builds verified scenes for the graph
families known to be realizable.
"""

from .construct import (
    ConstructionParams,
    PlaneDrawing,
    TreeLayoutParams,
    construct_k11n,
    construct_tree,
    construct_triangulated,
    split_cut_vertices,
    validate_drawing,
    verify_roundtrip,
)
from .errors import (
    DisconnectedInputError,
    DrawingError,
    DrawingFormatError,
    EndpointNotInRegionError,
    GenerationExhausted,
    GraphFormatError,
    InvalidSceneError,
    NameMismatchError,
    NotATreeError,
    SceneFormatError,
    SightlinesError,
    UnknownRegionError,
    UnsupportedGraphError,
    VerificationFailed,
)
from .formats import (
    drawing_from_json,
    drawing_to_json,
    scene_from_json,
    scene_to_json,
    witnesses_from_json,
    witnesses_to_json,
)
from .geometry import (
    AffineMap,
    Point,
    Poly,
    Pt,
    Region,
    Scene,
    Seg,
    apply_affine,
    pt,
    validate_scene,
)
from .graphs import (
    CONSTRUCTIBLE,
    REFUTED,
    UNKNOWN,
    Classification,
    Graph,
    bridge_or_triangle_violations,
    bridges,
    classify_compact,
    contains_k4,
    edges_in_triangles,
    graph_to_dot,
    graph_to_text,
    is_connected,
    is_planar,
    is_tree,
    make_graph,
    parse_graph_text,
    planar_or_k4,
    recognize_k11n,
    simplicial_reduce,
)
from .harness import FuzzConfig, FuzzReport, fuzz, random_scene
from .rationals import Q, qstr, rat
from .svg import render_svg
from .visibility import (
    VisGraph,
    Witness,
    compute_visibility_graph,
    point_in_region,
    sampling_oracle_edges,
    segment_is_sightline,
    sightline_exists,
)

__all__ = [
    "AffineMap",
    "CONSTRUCTIBLE",
    "Classification",
    "ConstructionParams",
    "DisconnectedInputError",
    "DrawingError",
    "DrawingFormatError",
    "EndpointNotInRegionError",
    "FuzzConfig",
    "FuzzReport",
    "GenerationExhausted",
    "Graph",
    "GraphFormatError",
    "InvalidSceneError",
    "NameMismatchError",
    "NotATreeError",
    "PlaneDrawing",
    "Point",
    "Poly",
    "Pt",
    "Q",
    "REFUTED",
    "Region",
    "Scene",
    "SceneFormatError",
    "Seg",
    "SightlinesError",
    "TreeLayoutParams",
    "UNKNOWN",
    "UnknownRegionError",
    "UnsupportedGraphError",
    "VerificationFailed",
    "VisGraph",
    "Witness",
    "apply_affine",
    "bridge_or_triangle_violations",
    "bridges",
    "classify_compact",
    "compute_visibility_graph",
    "construct_k11n",
    "construct_tree",
    "construct_triangulated",
    "contains_k4",
    "drawing_from_json",
    "drawing_to_json",
    "edges_in_triangles",
    "fuzz",
    "graph_to_dot",
    "graph_to_text",
    "is_connected",
    "is_planar",
    "is_tree",
    "make_graph",
    "parse_graph_text",
    "planar_or_k4",
    "point_in_region",
    "pt",
    "qstr",
    "random_scene",
    "rat",
    "recognize_k11n",
    "render_svg",
    "sampling_oracle_edges",
    "scene_from_json",
    "scene_to_json",
    "segment_is_sightline",
    "sightline_exists",
    "simplicial_reduce",
    "split_cut_vertices",
    "validate_drawing",
    "validate_scene",
    "verify_roundtrip",
    "witnesses_from_json",
    "witnesses_to_json",
]
