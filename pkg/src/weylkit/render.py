"""SVG pictures of rank-2 affine Coxeter complexes.

All clipping is exact; coordinates become decimals (6 places) only when the
document is written. Styling is fixed so output is byte-reproducible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .alcoves import CoxeterComplex, Gallery
from .errors import WeylError
from .geometry import Vector, inner_product

LINE_STYLE = 'stroke="#7f7f7f" stroke-width="1"'
FUNDAMENTAL_STYLE = 'fill="#f2c94c" fill-opacity="0.8" stroke="#000000" stroke-width="1.5"'
GALLERY_STYLE = 'fill="#56a0d3" fill-opacity="0.5" stroke="#1f4e79" stroke-width="1"'
TEXT_STYLE = 'font-family="sans-serif" font-size="10" text-anchor="middle" fill="#000000"'


@dataclass(frozen=True)
class RenderSpec:
    window: tuple[Fraction, Fraction, Fraction, Fraction]  # xmin, xmax, ymin, ymax
    pixels_per_unit: int = 100
    highlight: Gallery | None = None

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.window)
        if len(w) != 4:
            raise WeylError("window needs four numbers: xmin, xmax, ymin, ymax")
        if not (w[0] < w[1] and w[2] < w[3]):
            raise WeylError("window must satisfy xmin < xmax and ymin < ymax")
        if self.pixels_per_unit <= 0:
            raise WeylError("pixels_per_unit must be positive")
        object.__setattr__(self, "window", w)


def level_range(alpha: Vector, window) -> range:
    """Integer levels k with H_{alpha,k} meeting the closed window."""
    xmin, xmax, ymin, ymax = window
    values = [inner_product(Vector((x, y)), alpha) for x in (xmin, xmax) for y in (ymin, ymax)]
    return range(math.ceil(min(values)), math.floor(max(values)) + 1)


def clip_line(alpha: Vector, k, window) -> tuple[Vector, Vector] | None:
    """Endpoints of {<v,alpha> = k} inside the closed window, or None."""
    xmin, xmax, ymin, ymax = window
    a, b = alpha
    k = Fraction(k)
    pts = set()
    if b != 0:
        for x in (xmin, xmax):
            y = (k - a * x) / b
            if ymin <= y <= ymax:
                pts.add((x, y))
    if a != 0:
        for y in (ymin, ymax):
            x = (k - b * y) / a
            if xmin <= x <= xmax:
                pts.add((x, y))
    if not pts:
        return None
    ordered = sorted(pts)
    return Vector(ordered[0]), Vector(ordered[-1])


def hyperplane_segments(cx: CoxeterComplex, window) -> list[tuple[Vector, int, Vector, Vector]]:
    out = []
    for alpha in cx.positive:
        for k in level_range(alpha, window):
            seg = clip_line(alpha, k, window)
            if seg is not None:
                out.append((alpha, k, *seg))
    return out


def render_svg(cx: CoxeterComplex, spec: RenderSpec) -> str:
    phi = cx.phi
    if phi.rank != 2:
        raise WeylError("render supports rank-2 systems only")
    if phi.ambient_dim != 2:
        raise WeylError("render supports rank-2 systems with a 2-dimensional ambient space only")
    xmin, xmax, ymin, ymax = spec.window
    ppu = spec.pixels_per_unit

    def px(v: Vector) -> tuple[str, str]:
        return f"{float((v[0] - xmin) * ppu):.6f}", f"{float((ymax - v[1]) * ppu):.6f}"

    def polygon(points: Sequence[Vector], style: str) -> str:
        coords = " ".join(",".join(px(p)) for p in points)
        return f'<polygon points="{coords}" {style}/>'

    width = f"{float((xmax - xmin) * ppu):.6f}"
    height = f"{float((ymax - ymin) * ppu):.6f}"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g id="hyperplanes">',
    ]
    for alpha, k, p, q in hyperplane_segments(cx, spec.window):
        (x1, y1), (x2, y2) = px(p), px(q)
        lines.append(
            f'<line data-root="{alpha}" data-level="{k}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {LINE_STYLE}/>'
        )
    lines.append("</g>")
    lines.append('<g id="fundamental-alcove">')
    lines.append(polygon(cx.fundamental.vertices, FUNDAMENTAL_STYLE))
    lines.append("</g>")
    if spec.highlight is not None:
        lines.append('<g id="gallery">')
        for step, alcove in enumerate(spec.highlight.alcoves):
            lines.append(polygon(cx.vertices(alcove.address), GALLERY_STYLE))
            x, y = px(alcove.interior_point)
            lines.append(f'<text x="{x}" y="{y}" {TEXT_STYLE}>{step}</text>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
