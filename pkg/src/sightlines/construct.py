"""Builders that realize graphs as scenes, gated by re-verification.

The common device is the pocket interlock: an edge of a plane drawing is
broken near its midpoint and each endpoint's region keeps a polyline
half. One half folds into a pocket beside the edge; the other slides an
arm underneath it ending in a finger that reaches into the pocket mouth,
so the two halves see each other inside the pocket. The shapes are laid
out so that every straight line entering the break zone terminates on
one of the two halves: no line crosses from one side of the edge to the
other, which confines every sightline to a single face of the drawing.
Every constructor re-computes the visibility graph of what it built and
refuses to return a scene that does not match the target exactly.

Coordinates and interlock offsets are rational throughout. Offsets are
taken relative to each edge's own length, which keeps all generated
points rational (absolute offsets along an edge would need its length,
generally irrational).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import NamedTuple

from .errors import (
    DisconnectedInputError,
    DrawingError,
    InvalidSceneError,
    NameMismatchError,
    NotATreeError,
    VerificationFailed,
)
from .geometry import (
    LineFrame,
    Point,
    Pt,
    Region,
    Scene,
    Seg,
    _trace_segment,
    angular_less,
    dist2,
    dot,
    on_segment,
    orient,
    point_segment_dist2,
    segments_intersect,
    validate_scene,
    vcross,
)
from .graphs import Graph, is_connected, is_tree, make_graph
from .rationals import Q, rat
from .visibility import compute_visibility_graph


@dataclass(frozen=True)
class PlaneDrawing:
    """Straight-line drawing: vertex name -> Point, plus the drawn edges."""

    coordinates: dict
    edges: frozenset

    def point(self, v: str) -> Point:
        return self.coordinates[v]


@dataclass(frozen=True)
class ConstructionParams:
    """Interlock size knob, as a fraction of each edge's length.

    delta is the base offset unit of the pocket interlock; the widest
    feature spans five units along the edge from its midpoint. retries
    bounds how often delta is halved when the built scene fails
    validation or round-trip verification.
    """

    delta: object = Q(1, 16)
    retries: int = 8

    def __post_init__(self):
        object.__setattr__(self, "delta", rat(self.delta))
        if not (0 < self.delta < Q(1, 10)):
            raise ValueError("delta must be in (0, 1/10)")
        if not isinstance(self.retries, int) or self.retries < 0:
            raise ValueError("retries must be a nonnegative integer")


class SplitResult(NamedTuple):
    graph: Graph
    virtual_edges: frozenset
    origins: dict  # vertex of .graph -> vertex of the input graph


def _ang_cmp(u: Point, v: Point) -> int:
    if angular_less(u, v):
        return -1
    if angular_less(v, u):
        return 1
    return 0


def _fresh_copy_names(base: str, k: int, taken) -> list:
    sep = "_"
    while any(f"{base}{sep}{i}" in taken for i in range(1, k + 1)):
        sep += "_"
    return [f"{base}{sep}{i}" for i in range(1, k + 1)]


def split_cut_vertices(g: Graph, drawing: PlaneDrawing | None = None) -> SplitResult:
    """Split every cut vertex into one copy per block, chained virtually.

    The copies of v carry v's block edges; consecutive copies are joined
    by virtual edges that the constructors render as unbroken segments, so
    all copies end up as one connected region named v. With a drawing,
    blocks at a cut vertex are chained in the angular order of their edges
    around it (consecutive copies sit in adjacent sectors); otherwise the
    chain follows the blocks' lexicographically smallest edges.
    """
    if g.n == 0:
        return SplitResult(g, frozenset(), {})
    if not is_connected(g):
        raise DisconnectedInputError("cut-vertex splitting requires a connected graph")
    from .graphs import _biconnected_blocks

    blocks = _biconnected_blocks(g)
    at = {}  # vertex -> list of block indices
    for bi, blk in enumerate(blocks):
        for e in blk:
            for v in e:
                lst = at.setdefault(v, [])
                if bi not in lst:
                    lst.append(bi)
    cut = {v for v, lst in at.items() if len(lst) > 1}
    if not cut:
        return SplitResult(g, frozenset(), {v: v for v in g.vertices})

    def low_dir(v, bi):
        pv = drawing.point(v)
        dirs = sorted(
            (
                drawing.point(b if a == v else a) - pv
                for a, b in blocks[bi]
                if v in (a, b)
            ),
            key=cmp_to_key(_ang_cmp),
        )
        return dirs[0]

    taken = set(g.vertices)
    rename = {}  # (vertex, block index) -> new name
    origins = {}
    chains = []
    for v in sorted(g.vertices):
        if v not in cut:
            origins[v] = v
            continue
        if drawing is None:
            order = sorted(at[v], key=lambda bi: min(blocks[bi]))
        else:
            order = sorted(
                at[v],
                key=cmp_to_key(lambda x, y: _ang_cmp(low_dir(v, x), low_dir(v, y))),
            )
        names = _fresh_copy_names(v, len(order), taken)
        taken.update(names)
        for name, bi in zip(names, order):
            rename[(v, bi)] = name
            origins[name] = v
        chains.append(names)

    edge_block = {}
    for bi, blk in enumerate(blocks):
        for e in blk:
            edge_block[e] = bi
    new_edges = set()
    for e in g.edges:
        bi = edge_block[e]
        a = rename.get((e[0], bi), e[0])
        b = rename.get((e[1], bi), e[1])
        new_edges.add((min(a, b), max(a, b)))
    virtual = set()
    for names in chains:
        for x, y in zip(names, names[1:]):
            ve = (min(x, y), max(x, y))
            virtual.add(ve)
            new_edges.add(ve)
    verts = tuple(sorted(origins))
    return SplitResult(
        make_graph(verts, new_edges), frozenset(virtual), origins
    )


def _embedding(g: Graph, coords):
    """CCW-sorted neighbor lists induced by the straight-line drawing."""
    emb = {}
    for v in g.vertices:
        pv = coords[v]

        def cmp(a, b):
            return _ang_cmp(coords[a] - pv, coords[b] - pv)

        emb[v] = sorted(g.neighbors(v), key=cmp_to_key(cmp))
    return emb


def _faces(g: Graph, coords):
    """Face cycles of the drawing as lists of directed edges.

    Each face keeps its interior on the left, so bounded faces come out
    counterclockwise (positive doubled area) and the unbounded face
    clockwise. A forest yields a single zero-area walk.
    """
    emb = _embedding(g, coords)
    pos = {v: {w: i for i, w in enumerate(nb)} for v, nb in emb.items()}
    seen = set()
    faces = []
    for a in g.vertices:
        for b in emb[a]:
            if (a, b) in seen:
                continue
            cyc = []
            u, w = a, b
            while (u, w) not in seen:
                seen.add((u, w))
                cyc.append((u, w))
                nxt = emb[w][(pos[w][u] - 1) % len(emb[w])]
                u, w = w, nxt
            faces.append(cyc)
    return faces


def _area2(cycle, coords):
    total = Q(0)
    for u, w in cycle:
        total += vcross(coords[u], coords[w])
    return total


def validate_drawing(g: Graph, d: PlaneDrawing):
    """Report violations of g having d as a triangulated plane drawing.

    Checks, in order: name coverage, edge-set agreement, distinct
    coordinates, no vertex on a foreign edge, no improper edge crossings,
    every bounded face a 3-cycle, unbounded face boundary convex. The
    convexity check applies when that boundary is a simple cycle; walks
    that revisit a vertex (bridges, cut vertices) are exempt, as is a
    forest, which has no cycles at all.
    """
    report = []
    have = set(d.coordinates)
    want = set(g.vertices)
    for v in sorted(want - have):
        report.append(f"drawing has no coordinate for vertex {v}")
    for v in sorted(have - want):
        report.append(f"drawing names unknown vertex {v}")
    if report:
        return report
    if d.edges != g.edges:
        extra = sorted(d.edges - g.edges)
        gone = sorted(g.edges - d.edges)
        if extra:
            report.append(f"drawing has edges not in the graph: {extra}")
        if gone:
            report.append(f"drawing lacks graph edges: {gone}")
        return report
    coords = d.coordinates
    spots = {}
    for v in sorted(g.vertices):
        key = (coords[v].x, coords[v].y)
        if key in spots:
            report.append(f"vertices {spots[key]} and {v} share a coordinate")
        spots[key] = v
    if report:
        return report
    edges = sorted(g.edges)
    for v in sorted(g.vertices):
        for a, b in edges:
            if v in (a, b):
                continue
            if on_segment(coords[v], coords[a], coords[b]):
                report.append(f"vertex {v} lies on edge {a}-{b}")
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, e = edges[j]
            shared = {a, b} & {c, e}
            if shared:
                (s,) = shared
                x = b if a == s else a
                y = e if c == s else c
                if orient(coords[s], coords[x], coords[y]) == 0 and (
                    dot(coords[x] - coords[s], coords[y] - coords[s]) > 0
                ):
                    report.append(f"edges {a}-{b} and {c}-{e} overlap at {s}")
            elif segments_intersect(coords[a], coords[b], coords[c], coords[e]):
                report.append(f"edges {a}-{b} and {c}-{e} cross")
    if report:
        return report
    for cyc in _faces(g, coords):
        area = _area2(cyc, coords)
        if area > 0 and len(cyc) != 3:
            walk = "-".join(u for u, _ in cyc)
            report.append(f"bounded face {walk} has {len(cyc)} sides")
        elif area < 0:
            ring = [u for u, _ in cyc]
            if len(set(ring)) == len(ring):
                k = len(ring)
                for t in range(k):
                    p, q, r = ring[t], ring[(t + 1) % k], ring[(t + 2) % k]
                    # Outer walk is clockwise: convexity means no left turn.
                    if orient(coords[p], coords[q], coords[r]) > 0:
                        report.append(
                            f"outer boundary is not convex at vertex {q}"
                        )
                        break
    return report


# Interlock emission. Points are expressed in the frame of the edge a->b
# with a<b by name: t runs along the edge, y along its left normal, both
# as fractions of the edge vector.


def _interlock_halves(pa: Point, pb: Point, delta, s: int):
    """Break the edge a-b into two interlocked polyline halves.

    With u = delta and the edge midpoint at t = 1/2, the a-half runs
    along the edge, then folds into a pocket: up the riser to height 4u,
    across the ceiling, down the far wall to 2u, and back along the
    return arm, leaving the pocket mouth open near the riser. The b-half
    runs along the edge from the other end, lifts to height u, slides an
    arm under the pocket, and raises a finger to 3u through the mouth.

    The layering seals the break: any line crossing the edge line inside
    the stub gap is stopped on the pocket side by the arm, the finger,
    the riser, or the ceiling (the ceiling overhangs every gap between
    them, and the lift plugs the low corridor past the wall), so both of
    its reachable ends lie on these two halves. Lines escaping flat along
    the edge end on the stubs' far vertices. Hence no sightline crosses
    an edge of the drawing, while the two halves see each other between
    the arm and the return.
    """
    d = pb - pa
    nrm = Point(-d.y, d.x)
    if s < 0:
        nrm = Point(d.y, -d.x)

    def at(t, y):
        return pa + d.scaled(t) + nrm.scaled(y)

    u = delta
    h = Q(1, 2)
    a_pts = (
        pa,
        at(h - 4 * u, Q(0)),
        at(h - 4 * u, 4 * u),
        at(h + 4 * u, 4 * u),
        at(h + 4 * u, 2 * u),
        at(h - 2 * u, 2 * u),
    )
    b_pts = (
        pb,
        at(h + 5 * u, Q(0)),
        at(h + 5 * u, u),
        at(h - 3 * u, u),
        at(h - 3 * u, 3 * u),
    )
    mk = lambda pts: [Seg(p, q) for p, q in zip(pts, pts[1:])]
    return mk(a_pts), mk(b_pts)


def _interlock_sides(g: Graph, coords, virtual):
    """Per-edge fold orientation: +1 folds the pocket to the left.

    Edges with exactly one bounded incident face fold into it; the rest
    (interior edges, bridges, tree edges) alternate by the edge's angular
    rank around its lexicographically smaller endpoint.
    """
    left_bounded = {}
    for cyc in _faces(g, coords):
        bounded = _area2(cyc, coords) > 0
        for de in cyc:
            left_bounded[de] = bounded
    emb = _embedding(g, coords)
    rank = {v: {w: i for i, w in enumerate(nb)} for v, nb in emb.items()}
    sides = {}
    for a, b in sorted(g.edges):
        if (a, b) in virtual:
            continue
        li = left_bounded.get((a, b), False)
        ri = left_bounded.get((b, a), False)
        if li != ri:
            sides[(a, b)] = 1 if li else -1
        else:
            sides[(a, b)] = 1 if rank[a][b] % 2 == 0 else -1
    return sides


def _interlock_reach2(pa: Point, pb: Point, delta):
    # Squared distance from the midpoint to the farthest interlock point,
    # the ceiling corner at (4*delta, 4*delta) in edge fractions.
    return 32 * delta * delta * dist2(pa, pb)


def _edge_feature2(g: Graph, coords, a: str, b: str):
    """Squared distance from the midpoint of a-b to foreign vertices/edges."""
    mid = Point((coords[a].x + coords[b].x) / 2, (coords[a].y + coords[b].y) / 2)
    best = None
    for v in g.vertices:
        if v in (a, b):
            continue
        d2 = dist2(mid, coords[v])
        if best is None or d2 < best:
            best = d2
    for c, e in g.edges:
        if {c, e} & {a, b}:
            continue
        d2 = point_segment_dist2(mid, coords[c], coords[e])
        if best is None or d2 < best:
            best = d2
    return best


def _emit_edge_material(split: SplitResult, coords, delta):
    g = split.graph
    sides = _interlock_sides(g, coords, split.virtual_edges)
    material = {split.origins[v]: [] for v in g.vertices}
    for a, b in sorted(g.edges):
        if (a, b) in split.virtual_edges:
            material[split.origins[a]].append(Seg(coords[a], coords[b]))
            continue
        half_a, half_b = _interlock_halves(
            coords[a], coords[b], delta, sides[(a, b)]
        )
        material[split.origins[a]].extend(half_a)
        material[split.origins[b]].extend(half_b)
    for v in g.vertices:
        if g.degree(v) == 0:
            material[split.origins[v]].append(Pt(coords[v]))
    return material


def _assemble_scene(material) -> Scene:
    return Scene(
        tuple(
            Region(name, tuple(pieces))
            for name, pieces in sorted(material.items())
        )
    )


def _place_copies(split: SplitResult, g: Graph, d: PlaneDrawing, shrink):
    """Coordinates for the split graph: copies fan out around the original.

    Each copy moves from the cut vertex along the angular middle of its
    block's edge directions, scaled by `shrink` times the shortest
    incident edge. Verification-driven halving of `shrink` is the retry
    path when the first placement crosses something.
    """
    coords = dict()
    for v in split.graph.vertices:
        coords[v] = d.point(split.origins[v])
    groups = {}
    for v in split.graph.vertices:
        if split.origins[v] != v:
            groups.setdefault(split.origins[v], []).append(v)
    for orig, copies in groups.items():
        pv = d.point(orig)
        near = None
        for a, b in g.edges:
            if orig in (a, b):
                w = b if a == orig else a
                d2 = dist2(pv, d.point(w))
                if near is None or d2 < near:
                    near = d2
        for copy in copies:
            dirs = sorted(
                (
                    d.point(split.origins[w]) - pv
                    for w in split.graph.neighbors(copy)
                    if (min(copy, w), max(copy, w)) not in split.virtual_edges
                ),
                key=cmp_to_key(_ang_cmp),
            )
            mid = dirs[len(dirs) // 2]
            linf = max(abs(mid.x), abs(mid.y))
            # near is a squared length; stay well inside it without roots.
            step = shrink * min(Q(1), near) / (1 + linf)
            coords[copy] = pv + mid.scaled(step / linf)
    return coords


def _gap_dir(u: Point, w: Point) -> Point:
    """A direction strictly inside the counterclockwise arc from u to w."""
    cr = vcross(u, w)
    s = u + w
    if cr > 0:
        return s
    if cr < 0:
        return Point(-s.x, -s.y)
    return Point(-u.y, u.x)


def _cut_gap_spurs(split: SplitResult, g: Graph, d: PlaneDrawing, coords, material, trim):
    """Seal the sight corridors past each cut vertex.

    The blocks at a cut vertex occupy disjoint angular sectors; a chord
    between two blocks' material must sweep through a sector gap, so one
    long spur per gap (anchored at the copy on the gap's clockwise side,
    trimmed short of anything it would run into) blocks every such chord.
    """
    groups = {}
    for v in split.graph.vertices:
        if split.origins[v] != v:
            groups.setdefault(split.origins[v], []).append(v)
    if not groups:
        return
    all_segs = [
        (pc.a, pc.b)
        for pieces in material.values()
        for pc in pieces
        if isinstance(pc, Seg)
    ]
    for orig in sorted(groups):
        pc0 = d.point(orig)
        span = 4 * max(
            max(abs((d.point(w) - pc0).x), abs((d.point(w) - pc0).y))
            for w in g.vertices
            if w != orig
        )
        rays = []
        for cp in groups[orig]:
            for w in split.graph.neighbors(cp):
                if (min(cp, w), max(cp, w)) in split.virtual_edges:
                    continue
                rays.append((d.point(split.origins[w]) - pc0, cp))
        rays.sort(key=cmp_to_key(lambda p, q: _ang_cmp(p[0], q[0])))
        for i, (u, cp) in enumerate(rays):
            w, cq = rays[(i + 1) % len(rays)]
            if cp == cq:
                continue
            direction = _unit_ish(_gap_dir(u, w))
            tip = coords[cp] + direction.scaled(span)
            hit = _ray_first_hit(coords[cp], tip, all_segs)
            if hit == 0:
                continue
            if hit is not None:
                tip = coords[cp] + direction.scaled(span * hit * trim)
            seg = Seg(coords[cp], tip)
            material[orig].append(seg)
            all_segs.append((seg.a, seg.b))


def construct_triangulated(
    g: Graph, d: PlaneDrawing, p: ConstructionParams | None = None
) -> Scene:
    """Scene realizing a graph drawn with all bounded faces triangular.

    Cut vertices are split and chained with virtual edges first; every
    remaining edge becomes a pocket interlock pair. The scene is
    returned only after an exact round trip back to g; failed attempts
    halve the interlock offsets (and the copy fan-out) and try again.
    """
    if p is None:
        p = ConstructionParams()
    if g.n == 0:
        return Scene(())
    report = validate_drawing(g, d)
    if report:
        raise DrawingError(report)
    split = split_cut_vertices(g, drawing=d)
    last = None
    shrink0 = Q(1, 8)
    for attempt in range(p.retries + 1):
        scale = Q(1, 2**attempt)
        delta = p.delta * scale
        if split.virtual_edges:
            coords = _place_copies(split, g, d, shrink0 * scale)
            if validate_drawing(split.graph, PlaneDrawing(coords, split.graph.edges)):
                continue
        else:
            coords = {v: d.point(v) for v in g.vertices}
        ok = True
        for a, b in split.graph.edges:
            if (a, b) in split.virtual_edges:
                continue
            fs2 = _edge_feature2(split.graph, coords, a, b)
            if fs2 is not None and 4 * _interlock_reach2(
                coords[a], coords[b], delta
            ) >= fs2:
                ok = False
                break
        if not ok:
            continue
        material = _emit_edge_material(split, coords, delta)
        _cut_gap_spurs(split, g, d, coords, material, Q(3, 4))
        scene = _assemble_scene(material)
        if validate_scene(scene):
            continue
        diff = verify_roundtrip(g, scene)
        if not diff:
            return scene
        last = (
            [(a, b) for tag, a, b in diff if tag == "spurious"],
            [(a, b) for tag, a, b in diff if tag == "missing"],
        )
    if last is None:
        last = ([], [])
    raise VerificationFailed(
        last[0], last[1], context=f"gave up after {p.retries + 1} attempts"
    )


def construct_k11n(n: int, names=None) -> Scene:
    """Comb scene for the complete tripartite graph K_{1,1,n}.

    One apex is a comb along the x axis: a base segment with a tooth of
    height 2 rising between consecutive marked points, so the points (the
    n degree-2 vertices, at height 1) cannot see each other. The other
    apex is a single point high above, seeing every marked point over the
    teeth and the base around the side.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    if names is None:
        comb, peak = "u", "v"
        marks = tuple(f"w{i}" for i in range(n))
    else:
        (comb, peak), marks = names
        marks = tuple(marks)
        if len(marks) != n:
            raise ValueError(f"expected {n} middle names, got {len(marks)}")
    pieces = [Seg(Point(Q(-1), Q(0)), Point(Q(n), Q(0)))]
    for i in range(n - 1):
        x = Q(2 * i + 1, 2)
        pieces.append(Seg(Point(x, Q(0)), Point(x, Q(2))))
    height = Q(16 * n + 4)
    regions = [
        Region(comb, tuple(pieces)),
        Region(peak, (Pt(Point(Q(0), height)),)),
    ]
    for i, name in enumerate(marks):
        regions.append(Region(name, (Pt(Point(Q(i), Q(1))),)))
    scene = Scene(tuple(sorted(regions, key=lambda r: r.name)))
    target = make_graph(
        (comb, peak) + marks,
        [(comb, peak)] + [(comb, w) for w in marks] + [(peak, w) for w in marks],
    )
    diff = verify_roundtrip(target, scene)
    if diff:
        raise VerificationFailed(
            [(a, b) for tag, a, b in diff if tag == "spurious"],
            [(a, b) for tag, a, b in diff if tag == "missing"],
            context=f"comb for n={n}",
        )
    return scene


@dataclass(frozen=True)
class TreeLayoutParams:
    """Proportions of the nested-tub tree layout.

    Every vertex is an inverted U: a ceiling, two walls reaching down to
    `wall` of the box height, open underneath. Children hang in bays
    separated by teeth that stop at the lower `tooth` fraction, each child
    box `width` of its bay and `top` below the ceiling. The defaults keep
    every sightline between non-adjacent regions crossing a wall strictly
    above its lower end; they are fractions, so the scheme is scale-free.
    """

    width: object = Q(1, 5)
    wall: object = Q(1, 16)
    tooth: object = Q(1, 32)
    top: object = Q(1, 16)

    def __post_init__(self):
        for f in ("width", "wall", "tooth", "top"):
            object.__setattr__(self, f, rat(getattr(self, f)))
        if not (0 < self.width < Q(1, 2)):
            raise ValueError("width must be in (0, 1/2)")
        if not (0 < self.tooth < self.wall):
            raise ValueError("tooth must be in (0, wall)")
        if not (0 < self.top < Q(1, 4)) or not (0 < self.wall < Q(1, 4)):
            raise ValueError("top and wall must be in (0, 1/4)")


def _tree_centroid(t: Graph) -> str:
    # Vertex minimizing the largest component of its removal; tie -> name.
    best = None
    for v in t.vertices:
        sizes = []
        seen = {v}
        for w in t.neighbors(v):
            if w in seen:
                continue
            comp = 0
            stack = [w]
            seen.add(w)
            while stack:
                u = stack.pop()
                comp += 1
                for x in t.neighbors(u):
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
            sizes.append(comp)
        score = (max(sizes) if sizes else 0, v)
        if best is None or score < best:
            best = score
            pick = v
    return pick


def _unit_ish(d: Point) -> Point:
    linf = max(abs(d.x), abs(d.y))
    return d.scaled(1 / linf)


def _ray_first_hit(origin: Point, tip: Point, segs):
    """Earliest t in (0, 1] where origin + t*(tip - origin) meets a segment.

    None for a clear reach. Zero flags a segment running through the
    origin along the ray; callers drop such a spur outright.
    """
    frame = LineFrame(origin, tip - origin)
    best = None
    for a, b in segs:
        got = _trace_segment(frame, a, b)
        if got is None:
            continue
        lo, hi = got
        if hi <= 0 or lo > 1:
            continue
        tp = lo if lo > 0 else Q(0)
        if best is None or tp < best:
            best = tp
    return best


def construct_tree(t: Graph, params: TreeLayoutParams | None = None) -> Scene:
    """Scene whose visibility graph is exactly the given tree.

    Nested tubs: each vertex is an inverted U hanging in its parent's bay,
    with its own children in bays partitioned by teeth under its ceiling.
    A child's walls face the flanking teeth across open gaps, which gives
    exactly the parent-child sightlines. Everything else is shut out by a
    height argument: a segment leaving a tub from the material inside it
    enters past a wall at a height the wall still covers, because the
    inner material hangs well above the wall's lower end while the closest
    outside material keeps its horizontal distance. The result is
    round-trip verified and never returned unverified.
    """
    if params is None:
        params = TreeLayoutParams()
    if not is_tree(t):
        raise NotATreeError(f"graph with {t.n} vertices and {t.m} edges is not a tree")
    if t.n == 1:
        return Scene((Region(t.vertices[0], (Pt(Point(Q(0), Q(0))),)),))

    root = _tree_centroid(t)
    material = {v: [] for v in t.vertices}

    def build(v, par, x0, x1, y0, y1):
        # v's tub fills its whole box: walls down to y0, open below.
        w, h = x1 - x0, y1 - y0
        material[v].append(Seg(Point(x0, y1), Point(x1, y1)))
        material[v].append(Seg(Point(x0, y0), Point(x0, y1)))
        material[v].append(Seg(Point(x1, y0), Point(x1, y1)))
        kids = sorted(c for c in t.neighbors(v) if c != par)
        if not kids:
            return
        k = len(kids)
        ytooth = y0 + h * params.tooth
        for j in range(1, k):
            tx = x0 + w * Q(j, k)
            material[v].append(Seg(Point(tx, ytooth), Point(tx, y1)))
        for j, c in enumerate(kids):
            cx = x0 + w * Q(2 * j + 1, 2 * k)
            half = w * params.width / (2 * k)
            build(c, v, cx - half, cx + half, y0 + h * params.wall, y1 - h * params.top)

    build(root, None, Q(0), Q(1), Q(0), Q(1))
    scene = _assemble_scene(material)
    report = validate_scene(scene)
    if report:
        raise InvalidSceneError(report)
    diff = verify_roundtrip(t, scene)
    if diff:
        raise VerificationFailed(
            [(a, b) for tag, a, b in diff if tag == "spurious"],
            [(a, b) for tag, a, b in diff if tag == "missing"],
            context=f"tree on {t.n} vertices",
        )
    return scene


def verify_roundtrip(g: Graph, s: Scene):
    """Labelled edge diff between g and the exact visibility graph of s.

    Empty iff they match. Entries are ("spurious", a, b) for scene edges
    absent from g and ("missing", a, b) for graph edges the scene lacks.
    """
    report = validate_scene(s)
    if report:
        raise InvalidSceneError(report)
    if set(s.names) != set(g.vertices):
        only_s = sorted(set(s.names) - set(g.vertices))
        only_g = sorted(set(g.vertices) - set(s.names))
        raise NameMismatchError(
            f"scene-only names {only_s}, graph-only names {only_g}"
        )
    vg = compute_visibility_graph(s)
    out = []
    for a, b in sorted(vg.edges - g.edges):
        out.append(("spurious", a, b))
    for a, b in sorted(g.edges - vg.edges):
        out.append(("missing", a, b))
    return out
