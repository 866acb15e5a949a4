"""Randomized self-checks: scene generation and invariant fuzzing.

Every invariant asserted here is a proved theorem about visibility graphs
of disjoint compact regions, or an internal consistency contract of this
package. A failure therefore indicates a bug in the package, never a new
mathematical fact; the offending scene is persisted so the bug can be
replayed. Generation and checking are deterministic for a fixed config.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import GenerationExhausted
from .geometry import (
    AffineMap,
    Point,
    Poly,
    Pt,
    Q,
    Region,
    Scene,
    Seg,
    apply_affine,
    orient,
    pieces_intersect,
    validate_scene,
)
from .graphs import (
    REFUTED,
    bridge_or_triangle_violations,
    classify_compact,
    is_connected,
    make_graph,
    planar_or_k4,
)
from .visibility import SceneIndex, _compute_with_index, sampling_oracle_edges

_PIECE_KINDS = ("point", "segment", "polygon")


@dataclass(frozen=True)
class FuzzConfig:
    iterations: int = 100
    regionsMin: int = 3
    regionsMax: int = 8
    pieceMix: tuple = (1, 2, 2)  # weights for point, segment, polygon pieces
    convexOnly: bool = False
    coordinateRange: int = 50
    seed: int = 0


@dataclass
class FuzzReport:
    iterations: int = 0
    scenes: int = 0
    checks: dict = field(default_factory=dict)  # invariant -> [passes, fails]
    counterexamples: list = field(default_factory=list)

    def record(self, name: str, ok: bool):
        entry = self.checks.setdefault(name, [0, 0])
        entry[0 if ok else 1] += 1

    @property
    def failures(self) -> int:
        return sum(f for _, f in self.checks.values())

    def summary(self) -> str:
        lines = [f"iterations={self.iterations} scenes={self.scenes}"]
        for name in sorted(self.checks):
            p, f = self.checks[name]
            lines.append(f"  {name}: pass={p} fail={f}")
        if self.counterexamples:
            lines.append("counterexamples:")
            lines.extend(f"  {p}" for p in self.counterexamples)
        return "\n".join(lines)


def _rand_pt(rng: random.Random, cx: int, cy: int, r: int) -> Point:
    return Point(Q(rng.randint(cx - r, cx + r)), Q(rng.randint(cy - r, cy + r)))


def _hull(points):
    # Monotone chain with strict turns: output is strictly convex CCW.
    pts = sorted(set((p.x, p.y) for p in points))
    if len(pts) < 3:
        return None
    pts = [Point(x, y) for x, y in pts]

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) != 1:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 3 else None


def _make_piece(rng: random.Random, kind: str, cx: int, cy: int, anchor):
    r = 4
    if kind == "point":
        if anchor is not None:
            return Pt(anchor)
        return Pt(_rand_pt(rng, cx, cy, r))
    if kind == "segment":
        a = anchor if anchor is not None else _rand_pt(rng, cx, cy, r)
        for _ in range(8):
            b = _rand_pt(rng, int(a.x), int(a.y), 3)
            if b != a:
                return Seg(a, b)
        return None
    # polygon: hull of a few integer points; anchored copies are translated
    # so their first vertex lands on the anchor, keeping the region connected.
    for _ in range(8):
        k = rng.randint(3, 5)
        pts = [_rand_pt(rng, cx, cy, r) for _ in range(k)]
        hull = _hull(pts)
        if hull is None:
            continue
        if anchor is not None:
            shift = anchor - hull[0]
            hull = [v + shift for v in hull]
        return Poly(tuple(hull))
    return None


def _make_region(rng: random.Random, name: str, cfg: FuzzConfig):
    margin = 6
    lim = max(cfg.coordinateRange - margin, margin)
    cx = rng.randint(-lim, lim)
    cy = rng.randint(-lim, lim)
    n_pieces = 1 if cfg.convexOnly else rng.choice((1, 1, 1, 2, 2, 3))
    pieces = []
    for i in range(n_pieces):
        kind = rng.choices(_PIECE_KINDS, weights=cfg.pieceMix, k=1)[0]
        if i > 0:
            # Later pieces grow out of an existing vertex: the shared point
            # keeps the union connected. A repeated point adds nothing.
            if kind == "point":
                kind = "segment"
            host = pieces[rng.randrange(len(pieces))]
            verts = host.vertices()
            anchor = verts[rng.randrange(len(verts))]
        else:
            anchor = None
        piece = _make_piece(rng, kind, cx, cy, anchor)
        if piece is None:
            return None
        pieces.append(piece)
    return Region(name, tuple(pieces))


def random_scene(cfg: FuzzConfig, iteration: int) -> Scene:
    """Deterministic random valid scene for (cfg, iteration).

    Regions are rejection-sampled against the ones already placed; raises
    GenerationExhausted when the attempt budget runs out (tiny coordinate
    ranges with many regions can make placement infeasible).
    """
    rng = random.Random(cfg.seed * 1_000_003 + iteration)
    n = rng.randint(cfg.regionsMin, cfg.regionsMax)
    budget = 200 + 120 * n
    placed = []
    attempts = 0
    while len(placed) < n:
        attempts += 1
        if attempts > budget:
            raise GenerationExhausted(
                f"could not place {n} disjoint regions within {budget} attempts "
                f"(range {cfg.coordinateRange})"
            )
        region = _make_region(rng, f"r{len(placed)}", cfg)
        if region is None:
            continue
        clash = any(
            pieces_intersect(p, q)
            for other in placed
            for p in other.pieces
            for q in region.pieces
        )
        if clash:
            continue
        placed.append(region)
    scene = Scene(tuple(placed))
    report = validate_scene(scene)
    if report:
        # By construction this should be unreachable; treat as exhaustion
        # rather than shipping an invalid scene to callers.
        raise GenerationExhausted(f"generated scene failed validation: {report[0]}")
    return scene


def _random_affine(rng: random.Random) -> AffineMap:
    while True:
        a, b, c, d = (Q(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(4))
        if a * d - b * c != 0:
            e = Q(rng.randint(-20, 20))
            f = Q(rng.randint(-20, 20))
            return AffineMap(a, b, c, d, e, f)


def _proper_cross(w1, w2) -> bool:
    o1 = orient(w1.a, w1.b, w2.a)
    o2 = orient(w1.a, w1.b, w2.b)
    o3 = orient(w2.a, w2.b, w1.a)
    o4 = orient(w2.a, w2.b, w1.b)
    return o1 * o2 < 0 and o3 * o4 < 0


def _check_scene(scene: Scene, cfg: FuzzConfig, rng: random.Random, report: FuzzReport, fail):
    vg, idx = _compute_with_index(scene)
    g = make_graph(vg.vertices, vg.edges)

    bad = bridge_or_triangle_violations(g)
    ok = not bad
    report.record("edge-bridge-or-triangle", ok)
    if not ok:
        fail("edge-bridge-or-triangle", f"violating edges {sorted(bad)}")

    ok = is_connected(g)
    report.record("connected", ok)
    if not ok:
        fail("connected", "visibility graph is disconnected")

    if cfg.convexOnly:
        ok = planar_or_k4(g)
        report.record("planar-or-k4", ok)
        if not ok:
            fail("planar-or-k4", "convex scene graph is non-planar without a K4")

        # Crossing sightlines force each crossed edge into a K4, though
        # not necessarily one spanned by the four crossing regions: the
        # guaranteed clique comes from an extremal crossing, which can
        # involve two entirely different regions.
        ok = True
        detail = ""
        in_k4 = {}

        def pair_in_k4(a: str, b: str) -> bool:
            key = (min(a, b), max(a, b))
            got = in_k4.get(key)
            if got is None:
                common = [v for v in g.neighbors(a) if g.has_edge(v, b)]
                got = any(
                    g.has_edge(x, y)
                    for k, x in enumerate(common)
                    for y in common[k + 1 :]
                )
                in_k4[key] = got
            return got

        wits = [vg.witnesses[e] for e in sorted(vg.edges)]
        for i in range(len(wits)):
            for j in range(i + 1, len(wits)):
                w1, w2 = wits[i], wits[j]
                four = {w1.regionA, w1.regionB, w2.regionA, w2.regionB}
                if len(four) != 4 or not _proper_cross(w1, w2):
                    continue
                for w in (w1, w2):
                    if not pair_in_k4(w.regionA, w.regionB):
                        ok = False
                        detail = (
                            f"edge {w.regionA}-{w.regionB} has a crossing "
                            "witness but is in no K4"
                        )
        report.record("crossing-witnesses-k4", ok)
        if not ok:
            fail("crossing-witnesses-k4", detail)

    # Deleting a region whose neighborhood is a clique must delete exactly
    # its own vertex from the graph.
    name_to_idx = {nm: i for i, nm in enumerate(vg.vertices)}
    for v in g.vertices:
        nb = g.neighbors(v)
        clique = all(
            g.has_edge(a, b) for k, a in enumerate(nb) for b in nb[k + 1:]
        )
        if not clique:
            continue
        sub_edges = idx.edge_set(skip=name_to_idx[v])
        got = {
            (min(vg.vertices[x], vg.vertices[y]), max(vg.vertices[x], vg.vertices[y]))
            for (x, y) in sub_edges
        }
        want = {e for e in g.edges if v not in e}
        ok = got == want
        report.record("simplicial-deletion", ok)
        if not ok:
            fail(
                "simplicial-deletion",
                f"deleting {v}: spurious {sorted(got - want)}, missing {sorted(want - got)}",
            )

    sampled = sampling_oracle_edges(scene, budget=12, seed=rng.randint(0, 10**6))
    ok = all(e in vg.edges for e, _ in sampled)
    report.record("oracle-sound", ok)
    if not ok:
        extra = sorted(e for e, _ in sampled if e not in vg.edges)
        fail("oracle-sound", f"sampling oracle found non-edges {extra}")

    m = _random_affine(rng)
    moved = apply_affine(scene, m)
    vg2, _ = _compute_with_index(moved)
    ok = vg2.edges == vg.edges
    report.record("affine-invariant", ok)
    if not ok:
        d1 = sorted(vg.edges - vg2.edges)
        d2 = sorted(vg2.edges - vg.edges)
        fail("affine-invariant", f"lost {d1} gained {d2} under {m}")

    cls = classify_compact(g, build=False)
    ok = cls.verdict != REFUTED
    report.record("classifier-sound", ok)
    if not ok:
        fail("classifier-sound", f"real visibility graph refuted: {cls.evidence}")


def fuzz(cfg: FuzzConfig, out_dir=None) -> FuzzReport:
    """Run the invariant suite over cfg.iterations random scenes.

    Counterexamples (scene JSON plus a manifest line) are written under
    out_dir; any failure means a bug in this package, since every checked
    property is a theorem about visibility graphs or a contract of the
    implementation.
    """
    from .formats import scene_to_json

    report = FuzzReport()
    out_path = Path(out_dir) if out_dir is not None else Path("fuzz_counterexamples")
    manifest = None

    for it in range(cfg.iterations):
        report.iterations += 1
        try:
            scene = random_scene(cfg, it)
        except GenerationExhausted:
            continue
        report.scenes += 1
        rng = random.Random(cfg.seed * 7_368_787 + it)

        def fail(invariant: str, detail: str, _it=it, _scene=scene):
            nonlocal manifest
            out_path.mkdir(parents=True, exist_ok=True)
            fname = out_path / f"counterexample_{_it:05d}_{invariant}.json"
            fname.write_text(scene_to_json(_scene))
            if manifest is None:
                manifest = (out_path / "manifest.txt").open("a")
            manifest.write(f"iteration={_it} invariant={invariant} file={fname.name} {detail}\n")
            manifest.flush()
            report.counterexamples.append(str(fname))

        _check_scene(scene, cfg, rng, report, fail)

    if manifest is not None:
        manifest.close()
    return report
