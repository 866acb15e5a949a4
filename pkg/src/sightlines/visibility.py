"""Visibility graphs of scenes, with verified witnesses.

Two regions see each other when some closed segment joins a point of one
to a point of the other without meeting any third region. The decision
procedure is exact:

  1. Try every segment between a vertex of A and a vertex of B.
  2. Sweep every line spanned by two scene vertices: collect each region's
     parameter intervals along the line, then scan them in order looking
     for an interval of A and an interval of B with no other region's
     interval between them. Interval midpoints give the witness.
  3. Sweep, for every scene vertex, one probe line per angular gap between
     consecutive directions toward other vertices, plus one vertical probe
     per gap between consecutive distinct vertex x coordinates.

Stage 2 alone is not sufficient: blocking is a closed condition, so a
scene can admit sightlines only on lines that touch one vertex or none
(every two-vertex line exactly grazes some third region). The walk
outcome is constant on each stratum of the arrangement of per-vertex line
pencils, and stages 2 and 3 together test every vertex and every edge of
that arrangement; free lines in this package's own test corpus and fuzz
runs always show up there. Witnesses returned by the public API are
re-verified with an independent segment check before being handed out.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from .errors import (
    EndpointNotInRegionError,
    InvalidSceneError,
    SightlinesError,
    UnknownRegionError,
)
from .geometry import (
    IntervalSet,
    LineFrame,
    Piece,
    Point,
    Poly,
    Pt,
    Q,
    Region,
    Scene,
    Seg,
    on_segment,
    point_in_convex,
    segments_intersect,
    trace_piece,
    validate_scene,
    segment_hits_convex,
)


@dataclass(frozen=True)
class Witness:
    """A verified sightline: a lies in regionA, b in regionB."""

    regionA: str
    regionB: str
    a: Point
    b: Point


@dataclass(frozen=True)
class VisGraph:
    vertices: tuple
    edges: frozenset
    witnesses: dict

    def has_edge(self, a: str, b: str) -> bool:
        return (min(a, b), max(a, b)) in self.edges


def point_in_region(region: Region, p: Point) -> bool:
    for piece in region.pieces:
        if isinstance(piece, Pt):
            if piece.at == p:
                return True
        elif isinstance(piece, Seg):
            if on_segment(p, piece.a, piece.b):
                return True
        elif point_in_convex(p, piece.verts):
            return True
    return False


def _seg_hits_piece(a: Point, b: Point, piece: Piece) -> bool:
    if isinstance(piece, Pt):
        return on_segment(piece.at, a, b)
    if isinstance(piece, Seg):
        return segments_intersect(a, b, piece.a, piece.b)
    return segment_hits_convex(a, b, piece.verts)


def _seg_hits_region(a: Point, b: Point, region: Region) -> bool:
    return any(_seg_hits_piece(a, b, piece) for piece in region.pieces)


def segment_is_sightline(scene: Scene, A: str, B: str, a: Point, b: Point) -> bool:
    """True iff the closed segment ab meets no region besides A and B.

    The endpoints are checked preconditions: a must lie in region A and b
    in region B, else this raises rather than returning False.
    """
    for name in (A, B):
        if not scene.has_region(name):
            raise UnknownRegionError(f"no region named {name!r}")
    if not point_in_region(scene.region(A), a):
        raise EndpointNotInRegionError(f"point ({a.x}, {a.y}) is not in region {A!r}")
    if not point_in_region(scene.region(B), b):
        raise EndpointNotInRegionError(f"point ({b.x}, {b.y}) is not in region {B!r}")
    for r in scene.regions:
        if r.name in (A, B):
            continue
        if _seg_hits_region(a, b, r):
            return False
    return True


class SceneIndex:
    """Per-scene caches for the sweep: vertex list and line traces.

    Line entries are keyed by the canonical line through two vertices and
    shared across all pair decisions on the scene, including decisions on
    the scene with one region deleted (the deleted region's intervals are
    simply skipped during the scan).
    """

    def __init__(self, scene: Scene):
        self.scene = scene
        self.regions = scene.regions
        self.verts = []  # (Point, region index), deduped, deterministic order
        seen = set()
        for ri, region in enumerate(self.regions):
            for piece in region.pieces:
                for v in piece.vertices():
                    key = (v.x, v.y)
                    if key not in seen:
                        seen.add(key)
                        self.verts.append((v, ri))
        self._lines = {}
        self._probes = None

    @staticmethod
    def _line_key(p: Point, q: Point):
        if p.x == q.x:
            return ("v", p.x)
        m = (q.y - p.y) / (q.x - p.x)
        return ("s", m, p.y - m * p.x)

    @staticmethod
    def _frame_for_key(key) -> LineFrame:
        if key[0] == "v":
            return LineFrame(Point(key[1], Q(0)), Point(Q(0), Q(1)))
        _, m, k = key
        return LineFrame(Point(Q(0), k), Point(Q(1), m))

    def line_entry(self, key):
        entry = self._lines.get(key)
        if entry is None:
            frame = self._frame_for_key(key)
            spans = []
            for ri, region in enumerate(self.regions):
                pairs = []
                for piece in region.pieces:
                    iv = trace_piece(frame, piece)
                    if iv is not None:
                        pairs.append(iv)
                if pairs:
                    for lo, hi in IntervalSet.from_pairs(pairs):
                        spans.append((lo, hi, ri))
            spans.sort(key=lambda s: (s[0], s[1]))
            entry = (frame, tuple(spans))
            self._lines[key] = entry
        return entry

    def probe_keys(self):
        """Line keys for the one-vertex and vertex-free probes (stage 3).

        Around each vertex, directions toward all other vertices are sorted
        modulo a half turn; one probe line per angular gap pins down every
        pencil stratum between consecutive two-vertex lines. Vertical
        probes midway between consecutive distinct vertex x coordinates do
        the same for the family of vertical lines. The set depends only on
        the scene, and it stays valid when a region is deleted: deletion
        only merges gaps, so every merged gap still contains a probe.
        """
        if self._probes is None:
            probes = []
            seen = set()

            def add(key):
                if key not in seen:
                    seen.add(key)
                    probes.append(key)

            def before(p, q):
                return -1 if p[0] * q[1] - p[1] * q[0] > 0 else 1

            pts = [v for v, _ in self.verts]
            for i, u in enumerate(pts):
                dirs = {}
                for j, w in enumerate(pts):
                    if j == i:
                        continue
                    dx, dy = w.x - u.x, w.y - u.y
                    if dy < 0 or (dy == 0 and dx < 0):
                        dx, dy = -dx, -dy
                    slope = ("v",) if dx == 0 else ("s", dy / dx)
                    if slope not in dirs:
                        dirs[slope] = (dx, dy)
                vecs = sorted(dirs.values(), key=cmp_to_key(before))
                if not vecs:
                    continue
                if len(vecs) == 1:
                    gaps = [(-vecs[0][1], vecs[0][0])]
                else:
                    gaps = [
                        (a[0] + b[0], a[1] + b[1]) for a, b in zip(vecs, vecs[1:])
                    ]
                    gaps.append(
                        (vecs[-1][0] - vecs[0][0], vecs[-1][1] - vecs[0][1])
                    )
                for dx, dy in gaps:
                    add(self._line_key(u, Point(u.x + dx, u.y + dy)))
            xs = sorted({p.x for p in pts})
            for x1, x2 in zip(xs, xs[1:]):
                add(("v", (x1 + x2) / 2))
            self._probes = tuple(probes)
        return self._probes

    def _walk(self, spans, ai: int, bi: int, skip):
        # Disjointness of valid scenes makes the spans totally ordered, so
        # a single pass with reset-on-obstacle finds a clear A..B window.
        last_a = None
        last_b = None
        for lo, hi, ri in spans:
            if ri == ai:
                mid = lo if lo == hi else (lo + hi) / 2
                if last_b is not None:
                    return (mid, last_b)
                last_a = mid
            elif ri == bi:
                mid = lo if lo == hi else (lo + hi) / 2
                if last_a is not None:
                    return (last_a, mid)
                last_b = mid
            elif ri != skip:
                last_a = None
                last_b = None
        return None

    def _vv_stage(self, ai: int, bi: int, skip):
        blockers = [
            r
            for ri, r in enumerate(self.regions)
            if ri != ai and ri != bi and ri != skip
        ]
        va = [v for p in self.regions[ai].pieces for v in p.vertices()]
        vb = [v for p in self.regions[bi].pieces for v in p.vertices()]
        for a in va:
            for b in vb:
                hit = -1
                for i, blocker in enumerate(blockers):
                    if _seg_hits_region(a, b, blocker):
                        hit = i
                        break
                if hit < 0:
                    return (a, b)
                if hit > 0:
                    # Move-to-front: nearby pairs tend to share blockers.
                    blockers.insert(0, blockers.pop(hit))
        return None

    def pair_decision(self, ai: int, bi: int, skip=None):
        """Witness points (pa, pb) with pa in region ai, pb in bi, or None.

        skip names a region index treated as deleted from the scene.
        """
        found = self._vv_stage(ai, bi, skip)
        if found is not None:
            return found
        seen_keys = set()
        verts = self.verts
        n = len(verts)
        for i in range(n):
            pi = verts[i][0]
            for j in range(i + 1, n):
                key = self._line_key(pi, verts[j][0])
                if key in seen_keys:
                    continue
                seen_keys.add(key)
                frame, spans = self.line_entry(key)
                got = self._walk(spans, ai, bi, skip)
                if got is not None:
                    return (frame.at(got[0]), frame.at(got[1]))
        for key in self.probe_keys():
            if key in seen_keys:
                continue
            seen_keys.add(key)
            frame, spans = self.line_entry(key)
            got = self._walk(spans, ai, bi, skip)
            if got is not None:
                return (frame.at(got[0]), frame.at(got[1]))
        return None

    def edge_set(self, skip=None):
        """All visible pairs as region-index pairs, with witness points."""
        out = {}
        n = len(self.regions)
        for ai in range(n):
            if ai == skip:
                continue
            for bi in range(ai + 1, n):
                if bi == skip:
                    continue
                got = self.pair_decision(ai, bi, skip)
                if got is not None:
                    out[(ai, bi)] = got
        return out


def sightline_exists(scene: Scene, A: str, B: str):
    """Return a verified Witness between regions A and B, or None.

    The first success under a fixed deterministic candidate order is
    returned, so repeated calls on the same scene agree exactly.
    """
    report = validate_scene(scene)
    if report:
        raise InvalidSceneError(report)
    for name in (A, B):
        if not scene.has_region(name):
            raise UnknownRegionError(f"no region named {name!r}")
    if A == B:
        raise UnknownRegionError("need two distinct region names")
    names = list(scene.names)
    ai, bi = names.index(A), names.index(B)
    idx = SceneIndex(scene)
    got = idx.pair_decision(min(ai, bi), max(ai, bi))
    if got is None:
        return None
    pa, pb = got if ai < bi else (got[1], got[0])
    w = Witness(A, B, pa, pb)
    if not segment_is_sightline(scene, A, B, pa, pb):
        raise SightlinesError("internal error: witness failed re-verification")
    return w


def _compute_with_index(scene: Scene):
    report = validate_scene(scene)
    if report:
        raise InvalidSceneError(report)
    idx = SceneIndex(scene)
    names = scene.names
    edges = set()
    witnesses = {}
    for (ai, bi), (pa, pb) in sorted(idx.edge_set().items()):
        na, nb = names[ai], names[bi]
        if nb < na:
            na, nb, pa, pb = nb, na, pb, pa
        if not segment_is_sightline(scene, na, nb, pa, pb):
            raise SightlinesError(
                f"internal error: witness for {na}-{nb} failed re-verification"
            )
        edges.add((na, nb))
        witnesses[(na, nb)] = Witness(na, nb, pa, pb)
    return VisGraph(tuple(names), frozenset(edges), witnesses), idx


def compute_visibility_graph(scene: Scene) -> VisGraph:
    """Exact visibility graph with one verified witness per edge."""
    return _compute_with_index(scene)[0]


def _candidate_points(region: Region, rng: random.Random, extra: int):
    pts = []
    seen = set()

    def add(p: Point):
        k = (p.x, p.y)
        if k not in seen:
            seen.add(k)
            pts.append(p)

    for piece in region.pieces:
        if isinstance(piece, Pt):
            add(piece.at)
        elif isinstance(piece, Seg):
            add(piece.a)
            add(piece.b)
            add(Point((piece.a.x + piece.b.x) / 2, (piece.a.y + piece.b.y) / 2))
        else:
            vs = piece.verts
            n = len(vs)
            for i in range(n):
                add(vs[i])
                w = vs[(i + 1) % n]
                add(Point((vs[i].x + w.x) / 2, (vs[i].y + w.y) / 2))
    for _ in range(extra):
        piece = region.pieces[rng.randrange(len(region.pieces))]
        vs = piece.vertices()
        i = rng.randrange(len(vs))
        j = rng.randrange(len(vs))
        lam = Q(rng.randint(0, 64), 64)
        p, q = vs[i], vs[j]
        add(p + (q - p).scaled(lam))
    return pts


def sampling_oracle_edges(scene: Scene, budget: int, seed: int):
    """Sound, incomplete edge oracle by candidate sampling.

    Tries up to `budget` candidate segments per region pair: vertex pairs
    first, then edge midpoints and seeded rational convex combinations of
    piece points. Every returned edge carries a witness that passed the
    exact segment check, so the result is a subset of the true edge set.
    Deterministic in (scene, budget, seed).
    """
    report = validate_scene(scene)
    if report:
        raise InvalidSceneError(report)
    out = set()
    names = scene.names
    pair_index = 0
    for ai, bi in combinations(range(len(names)), 2):
        pair_index += 1
        rng = random.Random(seed * 1_000_003 + pair_index)
        ra, rb = scene.regions[ai], scene.regions[bi]
        blockers = [r for r in scene.regions if r.name not in (ra.name, rb.name)]
        ca = _candidate_points(ra, rng, extra=4)
        cb = _candidate_points(rb, rng, extra=4)
        tried = 0
        hit = None
        for a in ca:
            if hit or tried >= budget:
                break
            for b in cb:
                if tried >= budget:
                    break
                tried += 1
                if not any(_seg_hits_region(a, b, blk) for blk in blockers):
                    hit = (a, b)
                    break
        if hit is not None:
            na, nb = names[ai], names[bi]
            pa, pb = hit
            if nb < na:
                na, nb, pa, pb = nb, na, pb, pa
            out.add(((na, nb), Witness(na, nb, pa, pb)))
    return out
