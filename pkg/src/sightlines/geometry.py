"""Exact planar primitives: points, pieces, regions, scenes.

Every predicate here is decided in exact rational arithmetic. Orientation
tests return one of CCW, COLLINEAR, CW and never lie; there is no epsilon
anywhere in this module.

A scene is a set of named regions, each region a finite union of pieces
(points, segments, convex polygons) whose union is connected. Regions are
compact by construction. validate_scene reports violations as data rather
than raising, so callers can surface all problems at once.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .rationals import Q, rat

CCW = 1
COLLINEAR = 0
CW = -1

_ZERO = Q(0)
_ONE = Q(1)


@dataclass(frozen=True)
class Point:
    x: object
    y: object

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, k) -> "Point":
        return Point(self.x * k, self.y * k)


def pt(x, y) -> Point:
    """Build a Point, coercing coordinates through rat()."""
    return Point(rat(x), rat(y))


def sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def vcross(u: Point, v: Point):
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point):
    return u.x * v.x + u.y * v.y


def orient(p: Point, q: Point, r: Point) -> int:
    """Orientation of the ordered triple: CCW, COLLINEAR, or CW."""
    return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def dist2(p: Point, q: Point):
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient(a, b, p) != COLLINEAR:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed-segment intersection test."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == COLLINEAR and on_segment(c, a, b):
        return True
    if o2 == COLLINEAR and on_segment(d, a, b):
        return True
    if o3 == COLLINEAR and on_segment(a, c, d):
        return True
    if o4 == COLLINEAR and on_segment(b, c, d):
        return True
    return False


def point_segment_dist2(p: Point, a: Point, b: Point):
    """Exact squared distance from p to the closed segment ab."""
    ab = b - a
    len2 = dot(ab, ab)
    if len2 == 0:
        return dist2(p, a)
    t = dot(p - a, ab)
    if t <= 0:
        return dist2(p, a)
    if t >= len2:
        return dist2(p, b)
    c = vcross(ab, p - a)
    return c * c / len2


def _half(v: Point) -> int:
    # Angular half-plane: 0 for angles in [0, pi), 1 for [pi, 2pi).
    if v.y > 0 or (v.y == 0 and v.x > 0):
        return 0
    return 1


def angular_less(u: Point, v: Point) -> bool:
    """Strict order of nonzero direction vectors by angle from +x, CCW."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu < hv
    return vcross(u, v) > 0


def strictly_convex_ccw(verts) -> bool:
    """True iff verts is a strictly convex polygon listed CCW.

    Strict: no zero-length edges, no three consecutive collinear vertices,
    and total turning exactly one full revolution, which rules out
    star-polygon listings that turn left everywhere but wind twice.
    """
    n = len(verts)
    if n < 3:
        return False
    edges = []
    for i in range(n):
        e = verts[(i + 1) % n] - verts[i]
        if e.x == 0 and e.y == 0:
            return False
        edges.append(e)
    wraps = 0
    for i in range(n):
        a, b = edges[i], edges[(i + 1) % n]
        if vcross(a, b) <= 0:
            return False
        if not angular_less(a, b):
            wraps += 1
    return wraps == 1


def point_in_convex(p: Point, verts) -> bool:
    """Closed containment in a strictly convex CCW polygon."""
    n = len(verts)
    for i in range(n):
        if orient(verts[i], verts[(i + 1) % n], p) == CW:
            return False
    return True


# Pieces.


@dataclass(frozen=True)
class Pt:
    at: Point

    def vertices(self):
        return (self.at,)


@dataclass(frozen=True)
class Seg:
    a: Point
    b: Point

    def vertices(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class Poly:
    verts: tuple

    def vertices(self):
        return self.verts


Piece = Union[Pt, Seg, Poly]


def segment_hits_convex(a: Point, b: Point, verts) -> bool:
    if point_in_convex(a, verts) or point_in_convex(b, verts):
        return True
    n = len(verts)
    for i in range(n):
        if segments_intersect(a, b, verts[i], verts[(i + 1) % n]):
            return True
    return False


def _convex_hits_convex(vp, vq) -> bool:
    # If one polygon is nested in the other with no edge crossings, every
    # vertex is inside, so testing a single vertex per polygon suffices.
    if point_in_convex(vp[0], vq) or point_in_convex(vq[0], vp):
        return True
    np_, nq = len(vp), len(vq)
    for i in range(np_):
        a, b = vp[i], vp[(i + 1) % np_]
        for j in range(nq):
            if segments_intersect(a, b, vq[j], vq[(j + 1) % nq]):
                return True
    return False


def pieces_intersect(p: Piece, q: Piece) -> bool:
    """Closed-set intersection test between two pieces."""
    if isinstance(p, Pt):
        if isinstance(q, Pt):
            return p.at == q.at
        if isinstance(q, Seg):
            return on_segment(p.at, q.a, q.b)
        return point_in_convex(p.at, q.verts)
    if isinstance(p, Seg):
        if isinstance(q, Pt):
            return on_segment(q.at, p.a, p.b)
        if isinstance(q, Seg):
            return segments_intersect(p.a, p.b, q.a, q.b)
        return segment_hits_convex(p.a, p.b, q.verts)
    if isinstance(q, Pt):
        return point_in_convex(q.at, p.verts)
    if isinstance(q, Seg):
        return segment_hits_convex(q.a, q.b, p.verts)
    return _convex_hits_convex(p.verts, q.verts)


# Lines and interval traces.


@dataclass(frozen=True)
class IntervalSet:
    """Disjoint closed intervals [lo, hi], sorted; degenerate allowed."""

    intervals: tuple = ()

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "IntervalSet":
        items = sorted((rat(lo), rat(hi)) for lo, hi in pairs)
        merged = []
        for lo, hi in items:
            if hi < lo:
                raise ValueError(f"interval has hi < lo: [{lo}, {hi}]")
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        return cls(tuple(merged))

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def contains(self, t) -> bool:
        i = bisect_right(self.intervals, (t, t))
        if i < len(self.intervals) and self.intervals[i][0] == t:
            return True
        if i > 0:
            lo, hi = self.intervals[i - 1]
            if lo <= t <= hi:
                return True
        return False


class LineFrame:
    """A directed rational line, with an affine parameter on the plane.

    param() restricts to the coordinate t in origin + t*dir for points on
    the line; side() is positive left of the line, negative right.
    """

    __slots__ = ("origin", "dir", "_use_x")

    def __init__(self, origin: Point, direction: Point):
        if direction.x == 0 and direction.y == 0:
            raise ValueError("line direction must be nonzero")
        self.origin = origin
        self.dir = direction
        self._use_x = direction.x != 0

    def param(self, p: Point):
        if self._use_x:
            return (p.x - self.origin.x) / self.dir.x
        return (p.y - self.origin.y) / self.dir.y

    def side(self, p: Point):
        d = self.dir
        return d.x * (p.y - self.origin.y) - d.y * (p.x - self.origin.x)

    def at(self, t) -> Point:
        return Point(self.origin.x + t * self.dir.x, self.origin.y + t * self.dir.y)

    def cross_param(self, a: Point, b: Point, sa, sb):
        # Requires sign(sa) != sign(sb), both nonzero.
        ta, tb = self.param(a), self.param(b)
        return (sa * tb - sb * ta) / (sa - sb)


def _trace_segment(frame: LineFrame, a: Point, b: Point):
    sa = frame.side(a)
    sb = frame.side(b)
    if sa == 0 and sb == 0:
        ta, tb = frame.param(a), frame.param(b)
        return (ta, tb) if ta <= tb else (tb, ta)
    if sa == 0:
        t = frame.param(a)
        return (t, t)
    if sb == 0:
        t = frame.param(b)
        return (t, t)
    if (sa > 0) == (sb > 0):
        return None
    t = frame.cross_param(a, b, sa, sb)
    return (t, t)


def _trace_convex(frame: LineFrame, verts):
    n = len(verts)
    sides = [frame.side(v) for v in verts]
    params = []
    for i in range(n):
        if sides[i] == 0:
            params.append(frame.param(verts[i]))
    for i in range(n):
        j = (i + 1) % n
        si, sj = sides[i], sides[j]
        if si != 0 and sj != 0 and (si > 0) != (sj > 0):
            params.append(frame.cross_param(verts[i], verts[j], si, sj))
    if not params:
        return None
    return (min(params), max(params))


def trace_piece(frame: LineFrame, piece: Piece):
    """Closed param interval where the line meets the piece, or None."""
    if isinstance(piece, Pt):
        if frame.side(piece.at) == 0:
            t = frame.param(piece.at)
            return (t, t)
        return None
    if isinstance(piece, Seg):
        return _trace_segment(frame, piece.a, piece.b)
    return _trace_convex(frame, piece.verts)


# Regions and scenes.


@dataclass(frozen=True)
class Region:
    name: str
    pieces: tuple

    def vertices(self):
        out = []
        for p in self.pieces:
            out.extend(p.vertices())
        return tuple(out)


@dataclass(frozen=True)
class Scene:
    regions: tuple = ()
    _by_name: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {r.name: r for r in self.regions})

    @property
    def names(self):
        return tuple(r.name for r in self.regions)

    def region(self, name: str) -> Region:
        return self._by_name[name]

    def has_region(self, name: str) -> bool:
        return name in self._by_name

    @property
    def convex_only(self) -> bool:
        """True when every region is a single piece, hence convex."""
        return all(len(r.pieces) == 1 for r in self.regions)


def line_region_intervals(origin: Point, direction: Point, region: Region) -> IntervalSet:
    """Parameter intervals where the line origin + t*dir meets the region."""
    frame = LineFrame(origin, direction)
    pairs = []
    for piece in region.pieces:
        iv = trace_piece(frame, piece)
        if iv is not None:
            pairs.append(iv)
    return IntervalSet.from_pairs(pairs)


ValidationReport = list


def _valid_name(name: str) -> bool:
    if not name or not isinstance(name, str):
        return False
    return all(c.isascii() and (c.isalnum() or c == "_") for c in name)


def _piece_violations(rname: str, idx: int, piece: Piece):
    out = []
    label = f"region {rname!r} piece {idx}"
    if isinstance(piece, Seg):
        if piece.a == piece.b:
            out.append(f"{label}: degenerate segment (use a point piece)")
    elif isinstance(piece, Poly):
        if not strictly_convex_ccw(piece.verts):
            out.append(f"{label}: polygon is not strictly convex in CCW order")
    elif not isinstance(piece, Pt):
        out.append(f"{label}: unknown piece type {type(piece).__name__}")
    return out


def validate_scene(scene: Scene) -> ValidationReport:
    """Check scene well-formedness; returns a list of violations, empty iff valid.

    Violations are data, not exceptions: a caller gets every problem in one
    pass. Checks names, per-piece shape, per-region connectivity, and
    pairwise region disjointness.
    """
    report = []
    seen = set()
    for r in scene.regions:
        if not _valid_name(r.name):
            report.append(f"bad region name {r.name!r}: need nonempty ASCII [A-Za-z0-9_]")
        if r.name in seen:
            report.append(f"duplicate region name {r.name!r}")
        seen.add(r.name)
        if not r.pieces:
            report.append(f"region {r.name!r} has no pieces")
        for i, piece in enumerate(r.pieces):
            report.extend(_piece_violations(r.name, i, piece))

    # Connectivity of each region's piece union.
    for r in scene.regions:
        k = len(r.pieces)
        if k <= 1:
            continue
        adj = [[] for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                if pieces_intersect(r.pieces[i], r.pieces[j]):
                    adj[i].append(j)
                    adj[j].append(i)
        seen_p = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen_p:
                    seen_p.add(v)
                    stack.append(v)
        if len(seen_p) != k:
            report.append(f"region {r.name!r} is disconnected: pieces do not form one component")

    # Pairwise disjointness.
    n = len(scene.regions)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = scene.regions[i], scene.regions[j]
            hit = any(
                pieces_intersect(pa, pb) for pa in a.pieces for pb in b.pieces
            )
            if hit:
                report.append(f"regions {a.name!r} and {b.name!r} intersect")
    return report


@dataclass(frozen=True)
class AffineMap:
    """x' = a x + b y + e, y' = c x + d y + f; must be invertible."""

    a: object
    b: object
    c: object
    d: object
    e: object
    f: object

    def __post_init__(self):
        for fld in ("a", "b", "c", "d", "e", "f"):
            object.__setattr__(self, fld, rat(getattr(self, fld)))
        if self.det == 0:
            raise ValueError("affine map is singular")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, p: Point) -> Point:
        return Point(
            self.a * p.x + self.b * p.y + self.e,
            self.c * p.x + self.d * p.y + self.f,
        )


def _apply_piece(m: AffineMap, piece: Piece, flip: bool) -> Piece:
    if isinstance(piece, Pt):
        return Pt(m.apply(piece.at))
    if isinstance(piece, Seg):
        return Seg(m.apply(piece.a), m.apply(piece.b))
    verts = tuple(m.apply(v) for v in piece.verts)
    if flip:
        # Orientation-reversing maps flip vertex order; restore CCW.
        verts = verts[::-1]
    return Poly(verts)


def apply_affine(scene: Scene, m: AffineMap) -> Scene:
    """Transform every piece of every region; polygons stay CCW."""
    flip = m.det < 0
    return Scene(
        tuple(
            Region(r.name, tuple(_apply_piece(m, p, flip) for p in r.pieces))
            for r in scene.regions
        )
    )
