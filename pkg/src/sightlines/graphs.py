"""Abstract graphs: file formats, necessary conditions, classification.

Graphs are simple and undirected, vertices named by ASCII identifiers.
The checks here are the graph-side counterparts of geometric theorems:
every edge of a compact-scene visibility graph is a bridge or lies in a
triangle; such graphs are connected; deleting a vertex whose neighborhood
is a clique preserves realizability, so the condition must keep holding
while simplicial vertices are stripped. classify_compact turns those facts
plus the constructive cases (trees, K_{1,1,n}, triangulated drawings) into
a three-way verdict.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .errors import GraphFormatError, SightlinesError

_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")

REFUTED = "RefutedCompact"
CONSTRUCTIBLE = "ConstructibleCompact"
UNKNOWN = "Unknown"


def _norm_edge(a: str, b: str):
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: frozenset
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = set()
        for v in self.vertices:
            if not isinstance(v, str) or not _NAME_RE.match(v):
                raise ValueError(f"bad vertex name {v!r}")
            if v in names:
                raise ValueError(f"duplicate vertex {v!r}")
            names.add(v)
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = e
            if a == b:
                raise ValueError(f"self-loop at {a!r}")
            if e != _norm_edge(a, b):
                raise ValueError(f"edge {e!r} is not name-sorted")
            if a not in names or b not in names:
                raise ValueError(f"edge {a}-{b} references unknown vertex")
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(
            self, "_adj", {v: tuple(sorted(nb)) for v, nb in adj.items()}
        )

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: str):
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, a: str, b: str) -> bool:
        return _norm_edge(a, b) in self.edges

    def without(self, v: str) -> "Graph":
        return Graph(
            tuple(u for u in self.vertices if u != v),
            frozenset(e for e in self.edges if v not in e),
        )

    def induced(self, keep) -> "Graph":
        ks = set(keep)
        return Graph(
            tuple(u for u in self.vertices if u in ks),
            frozenset(e for e in self.edges if e[0] in ks and e[1] in ks),
        )


def make_graph(vertices, edges) -> Graph:
    """Build a Graph from any iterables of names and vertex pairs."""
    return Graph(
        tuple(vertices), frozenset(_norm_edge(a, b) for a, b in edges)
    )


# Text format: a header line "p vg <n> <m>", then n vertex lines
# "v <name>" and m edge lines "e <name> <name>". '#' starts a comment.


def parse_graph_text(text: str, source: str = "<graph>") -> Graph:
    verts = []
    edges = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        where = f"{source}:{lineno}"
        if header is None:
            if tok[0] != "p" or len(tok) != 4 or tok[1] != "vg":
                raise GraphFormatError(f"{where}: expected header 'p vg <n> <m>'")
            try:
                header = (int(tok[2]), int(tok[3]))
            except ValueError:
                raise GraphFormatError(f"{where}: counts must be integers") from None
            if header[0] < 0 or header[1] < 0:
                raise GraphFormatError(f"{where}: counts must be nonnegative")
            continue
        if tok[0] == "v":
            if len(tok) != 2:
                raise GraphFormatError(f"{where}: expected 'v <name>'")
            if not _NAME_RE.match(tok[1]):
                raise GraphFormatError(f"{where}: bad vertex name {tok[1]!r}")
            if tok[1] in verts:
                raise GraphFormatError(f"{where}: duplicate vertex {tok[1]!r}")
            verts.append(tok[1])
        elif tok[0] == "e":
            if len(tok) != 3:
                raise GraphFormatError(f"{where}: expected 'e <name> <name>'")
            a, b = tok[1], tok[2]
            if a == b:
                raise GraphFormatError(f"{where}: self-loop at {a!r}")
            for x in (a, b):
                if x not in verts:
                    raise GraphFormatError(f"{where}: unknown vertex {x!r}")
            e = _norm_edge(a, b)
            if e in edges:
                raise GraphFormatError(f"{where}: duplicate edge {a}-{b}")
            edges.append(e)
        else:
            raise GraphFormatError(f"{where}: unknown line type {tok[0]!r}")
    if header is None:
        raise GraphFormatError(f"{source}: empty input, expected 'p vg <n> <m>'")
    if header != (len(verts), len(edges)):
        raise GraphFormatError(
            f"{source}: header says {header[0]} vertices {header[1]} edges, "
            f"found {len(verts)} and {len(edges)}"
        )
    return Graph(tuple(verts), frozenset(edges))


def graph_to_text(g: Graph) -> str:
    lines = [f"p vg {g.n} {g.m}"]
    lines.extend(f"v {v}" for v in g.vertices)
    lines.extend(f"e {a} {b}" for a, b in sorted(g.edges))
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in g.vertices)
    lines.extend(f"  {a} -- {b};" for a, b in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


# Structural checks.


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def bridges(g: Graph):
    """All bridge edges, by one iterative DFS over the whole graph."""
    disc = {}
    low = {}
    out = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    # Skip one parent occurrence; simple graphs have no
                    # parallel edges, so later hits are genuine back edges.
                    stack[-1] = (u, None, it)
                    continue
                if w in disc:
                    if disc[w] < low[u]:
                        low[u] = disc[w]
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    break
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] > disc[p]:
                        out.add(_norm_edge(u, p))
    return out


def edges_in_triangles(g: Graph):
    out = set()
    for a, b in g.edges:
        na = set(g.neighbors(a))
        if any(w in na for w in g.neighbors(b)):
            out.add((a, b))
    return out


def bridge_or_triangle_violations(g: Graph):
    """Edges that are neither bridges nor in any triangle.

    Nonempty refutes realizability by disjoint compact regions.
    """
    ok = bridges(g) | edges_in_triangles(g)
    return {e for e in g.edges if e not in ok}


def contains_k4(g: Graph):
    """Four vertices inducing a K4, or None."""
    for a, b in sorted(g.edges):
        common = sorted(set(g.neighbors(a)) & set(g.neighbors(b)))
        for x, y in combinations(common, 2):
            if g.has_edge(x, y):
                return tuple(sorted((a, b, x, y)))
    return None


def _biconnected_blocks(g: Graph):
    """Blocks as edge lists, via DFS with an edge stack."""
    disc = {}
    low = {}
    estack = []
    blocks = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    stack[-1] = (u, None, it)
                    continue
                if w in disc:
                    # Push each back edge once, from its deeper endpoint.
                    if disc[w] < disc[u]:
                        estack.append(_norm_edge(u, w))
                        if disc[w] < low[u]:
                            low[u] = disc[w]
                else:
                    estack.append(_norm_edge(u, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    break
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        # p is an articulation toward u: pop u's block.
                        blk = []
                        target = _norm_edge(p, u)
                        while estack:
                            e = estack.pop()
                            blk.append(e)
                            if e == target:
                                break
                        blocks.append(blk)
    return blocks


def _find_cycle(vertices, adj):
    # DFS back edge; deterministic via sorted adjacency.
    start = vertices[0]
    parent = {start: None}
    stack = [(start, iter(adj[start]))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if w == parent[u]:
                continue
            if w in parent:
                cyc = [u]
                x = u
                while x != w:
                    x = parent[x]
                    cyc.append(x)
                return cyc[::-1]
            parent[w] = u
            stack.append((w, iter(adj[w])))
            break
        else:
            stack.pop()
    return None


def _planar_block(block_edges) -> bool:
    verts = sorted({v for e in block_edges for v in e})
    n = len(verts)
    m = len(block_edges)
    if n <= 4:
        return True
    if m > 3 * n - 6:
        return False
    adj = {v: sorted({w for e in block_edges for w in e if v in e and w != v}) for v in verts}
    edge_set = set(block_edges)

    cyc = _find_cycle(verts, adj)
    if cyc is None:
        return True
    embedded_v = set(cyc)
    embedded_e = set()
    for i in range(len(cyc)):
        embedded_e.add(_norm_edge(cyc[i], cyc[(i + 1) % len(cyc)]))
    faces = [tuple(cyc), tuple(reversed(cyc))]

    while True:
        # Fragments: connected chunks of the unembedded part, with their
        # attachment vertices on the embedded subgraph.
        frags = []
        resid = sorted(v for v in verts if v not in embedded_v)
        seen = set()
        for s in resid:
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            bag = [s]
            while bag:
                u = bag.pop()
                for w in adj[u]:
                    if w not in embedded_v and w not in comp:
                        comp.add(w)
                        seen.add(w)
                        bag.append(w)
            att = sorted(
                {w for u in comp for w in adj[u] if w in embedded_v}
            )
            frags.append(("comp", tuple(sorted(comp)), tuple(att)))
        for e in sorted(edge_set - embedded_e):
            if e[0] in embedded_v and e[1] in embedded_v:
                frags.append(("edge", e, e))
        if not frags:
            return True

        # A fragment with no admissible face refutes planarity; one with a
        # single admissible face has a forced placement, so prefer those.
        best = None
        for frag in frags:
            att = set(frag[2])
            adm = [f for f in faces if att <= set(f)]
            if not adm:
                return False
            if best is None or len(adm) < len(best[1]):
                best = (frag, adm)
        frag, adm = best
        face = adm[0]

        if frag[0] == "edge":
            path = list(frag[1])
        else:
            # Alpha path: leave a0 through the fragment interior, BFS to
            # any other embedded attachment.
            comp = set(frag[1])
            a0 = frag[2][0]
            prev = {a0: None}
            queue = [a0]
            path = None
            while queue and path is None:
                u = queue.pop(0)
                for w in adj[u]:
                    if w in prev:
                        continue
                    if u == a0 and w not in comp:
                        continue
                    if w in comp:
                        prev[w] = u
                        queue.append(w)
                    elif w in embedded_v:
                        path = [w]
                        x = u
                        while x is not None:
                            path.append(x)
                            x = prev[x]
                        path.reverse()
                        break
            if path is None:
                # Cannot happen for fragments of a biconnected block.
                raise SightlinesError("internal error: fragment with one attachment")

        a, b = path[0], path[-1]
        pos = {v: i for i, v in enumerate(face)}
        i, j = pos[a], pos[b]
        k = len(face)
        arc1 = [face[(i + t) % k] for t in range(0, (j - i) % k + 1)]
        arc2 = [face[(j + t) % k] for t in range(0, (i - j) % k + 1)]
        mid = path[1:-1]
        face1 = tuple(arc1 + list(reversed(mid)))
        face2 = tuple(arc2 + mid)
        faces.remove(face)
        faces.append(face1)
        faces.append(face2)
        for v in mid:
            embedded_v.add(v)
        for t in range(len(path) - 1):
            embedded_e.add(_norm_edge(path[t], path[t + 1]))


def is_planar(g: Graph) -> bool:
    """Planarity by face expansion within each biconnected block."""
    return all(_planar_block(blk) for blk in _biconnected_blocks(g))


def planar_or_k4(g: Graph) -> bool:
    """Necessary condition for scenes of convex regions."""
    return is_planar(g) or contains_k4(g) is not None


def is_simplicial(g: Graph, v: str) -> bool:
    nb = g.neighbors(v)
    return all(g.has_edge(a, b) for a, b in combinations(nb, 2))


def simplicial_reduce(g: Graph):
    """Strip simplicial vertices, least name first, down to at most one.

    Returns (reduced graph, removal sequence). A complete graph or a tree
    reduces to a single vertex; a chordless cycle is returned unchanged.
    """
    seq = []
    cur = g
    while cur.n > 1:
        cand = [v for v in sorted(cur.vertices) if is_simplicial(cur, v)]
        if not cand:
            break
        v = cand[0]
        seq.append(v)
        cur = cur.without(v)
    return cur, tuple(seq)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def recognize_k11n(g: Graph):
    """If g is K_{1,1,n}, return (n, (apex1, apex2), others); else None.

    Apexes are the two mutually adjacent vertices joined to everything;
    ties are broken by name order.
    """
    V = g.n
    if V < 2 or g.m != 2 * V - 3:
        return None
    if V == 2:
        u, v = sorted(g.vertices)
        return (0, (u, v), ()) if g.has_edge(u, v) else None
    if V == 3:
        if all(g.degree(v) == 2 for v in g.vertices):
            u, v, w = sorted(g.vertices)
            return (1, (u, v), (w,))
        return None
    tops = sorted(v for v in g.vertices if g.degree(v) == V - 1)
    if len(tops) != 2 or not g.has_edge(tops[0], tops[1]):
        return None
    rest = sorted(v for v in g.vertices if v not in tops)
    if any(g.degree(v) != 2 for v in rest):
        return None
    return (V - 2, (tops[0], tops[1]), tuple(rest))


@dataclass(frozen=True)
class Classification:
    verdict: str
    evidence: str


def classify_compact(g: Graph, drawing=None, build: bool = True) -> Classification:
    """Three-way verdict on realizability by disjoint compact regions.

    RefutedCompact verdicts cite a violated necessary condition, checked
    after every step of simplicial reduction. ConstructibleCompact ones
    are backed by an actually built and re-verified scene, so with
    build=True they are never speculative. build=False skips the scene
    constructions (the refutation side is unaffected) and reports Unknown
    for the constructive cases.
    """
    if g.n == 0:
        return Classification(CONSTRUCTIBLE, "empty graph: realized by the empty scene")
    if not is_connected(g):
        return Classification(
            REFUTED, "disconnected: visibility graphs of compact scenes are connected"
        )
    cur = g
    removed = []
    while True:
        bad = bridge_or_triangle_violations(cur)
        if bad:
            e = min(bad)
            ctx = f" after removing simplicial {removed}" if removed else ""
            return Classification(
                REFUTED,
                f"edge {e[0]}-{e[1]} is neither a bridge nor in a triangle{ctx}",
            )
        if cur.n <= 1:
            break
        cand = [v for v in sorted(cur.vertices) if is_simplicial(cur, v)]
        if not cand:
            break
        removed.append(cand[0])
        cur = cur.without(cand[0])

    if not build:
        return Classification(UNKNOWN, "construction skipped (recognition-only mode)")

    from . import construct  # deferred: construct imports this module

    if is_tree(g):
        try:
            construct.construct_tree(g)
            return Classification(
                CONSTRUCTIBLE, f"tree on {g.n} vertices: built and verified"
            )
        except Exception as exc:  # honest: report, do not guess
            return Classification(UNKNOWN, f"tree construction failed: {exc}")
    rec = recognize_k11n(g)
    if rec is not None:
        n, tops, rest = rec
        try:
            construct.construct_k11n(n, names=(tops, rest))
            return Classification(
                CONSTRUCTIBLE,
                f"K_{{1,1,{n}}} with apexes {tops[0]},{tops[1]}: built and verified",
            )
        except Exception as exc:
            return Classification(UNKNOWN, f"K_(1,1,n) construction failed: {exc}")
    if drawing is not None:
        report = construct.validate_drawing(g, drawing)
        if report:
            from .errors import DrawingError

            raise DrawingError(report)
        try:
            construct.construct_triangulated(g, drawing)
            return Classification(
                CONSTRUCTIBLE, "triangulated drawing realized: built and verified"
            )
        except Exception as exc:
            return Classification(UNKNOWN, f"construction from drawing failed: {exc}")
    return Classification(
        UNKNOWN,
        f"no necessary condition violated; reduced graph has {cur.n} vertices "
        "and no applicable construction",
    )
