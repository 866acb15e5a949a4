"""Standalone SVG rendering of scenes and their witnessed sightlines.

Output is purely presentational; nothing in the package consumes it.
Rational coordinates stay exact until the final formatting step here,
where they are fitted into a fixed 1000x1000 viewbox and printed with a
fixed number of decimals, so identical inputs render byte-identically.
"""

from __future__ import annotations

from .geometry import Point, Poly, Pt, Scene, Seg
from .rationals import Q

VIEW = 1000
MARGIN = 40

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
    "#bcbd22",
    "#e377c2",
)


def _bounds(scene: Scene, witnesses):
    xs, ys = [], []
    for r in scene.regions:
        for p in r.vertices():
            xs.append(p.x)
            ys.append(p.y)
    for w in witnesses:
        for p in (w.a, w.b):
            xs.append(p.x)
            ys.append(p.y)
    if not xs:
        return Q(0), Q(0), Q(1), Q(1)
    return min(xs), min(ys), max(xs), max(ys)


class _Fit:
    """Affine map from scene coordinates into the viewbox, y flipped."""

    def __init__(self, scene: Scene, witnesses):
        x0, y0, x1, y1 = _bounds(scene, witnesses)
        span = max(x1 - x0, y1 - y0)
        if span == 0:
            span = Q(1)
        self.scale = Q(VIEW - 2 * MARGIN) / span
        self.x0, self.y1 = x0, y1

    def x(self, q) -> str:
        return f"{float(MARGIN + (q - self.x0) * self.scale):.2f}"

    def y(self, q) -> str:
        # SVG y grows downward; flip about the top of the bounding box.
        return f"{float(MARGIN + (self.y1 - q) * self.scale):.2f}"


def render_svg(scene: Scene, vg=None) -> str:
    """Render a scene, plus the witnesses of vg when given, to SVG text.

    Regions are drawn in a fixed palette (cycling by sorted name order):
    polygons filled, segments stroked, points as dots, each region
    labeled once at its first vertex. Witness sightlines are dashed and
    labeled with their edge.
    """
    witnesses = []
    if vg is not None:
        witnesses = [vg.witnesses[e] for e in sorted(vg.witnesses)]
    fit = _Fit(scene, witnesses)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW} {VIEW}">',
        f'<rect width="{VIEW}" height="{VIEW}" fill="white"/>',
    ]
    for i, region in enumerate(sorted(scene.regions, key=lambda r: r.name)):
        color = _PALETTE[i % len(_PALETTE)]
        out.append(f'<g stroke="{color}" stroke-width="2">')
        for piece in region.pieces:
            if isinstance(piece, Poly):
                pts = " ".join(
                    f"{fit.x(p.x)},{fit.y(p.y)}" for p in piece.verts
                )
                out.append(
                    f'<polygon points="{pts}" fill="{color}" fill-opacity="0.35"/>'
                )
            elif isinstance(piece, Seg):
                out.append(
                    f'<line x1="{fit.x(piece.a.x)}" y1="{fit.y(piece.a.y)}" '
                    f'x2="{fit.x(piece.b.x)}" y2="{fit.y(piece.b.y)}"/>'
                )
            elif isinstance(piece, Pt):
                out.append(
                    f'<circle cx="{fit.x(piece.at.x)}" cy="{fit.y(piece.at.y)}" '
                    f'r="4" fill="{color}"/>'
                )
        anchor = region.vertices()[0] if region.pieces else None
        if anchor is not None:
            out.append(
                f'<text x="{fit.x(anchor.x)}" y="{fit.y(anchor.y)}" '
                f'fill="{color}" stroke="none" font-size="18" dx="6" dy="-6">'
                f"{region.name}</text>"
            )
        out.append("</g>")
    if witnesses:
        out.append('<g stroke="#333333" stroke-dasharray="6,4" stroke-width="1">')
        for w in witnesses:
            x1, y1 = fit.x(w.a.x), fit.y(w.a.y)
            x2, y2 = fit.x(w.b.x), fit.y(w.b.y)
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
            mx = f"{(float(x1) + float(x2)) / 2:.2f}"
            my = f"{(float(y1) + float(y2)) / 2:.2f}"
            out.append(
                f'<text x="{mx}" y="{my}" stroke="none" fill="#333333" '
                f'font-size="14">{w.regionA}-{w.regionB}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
