"""Deterministic SVG figures of planar moment polytopes.

Sum-zero vectors of R^3 are drawn in the orthonormal frame
u1 = (1,-1,0)/sqrt(2), u2 = (1,1,-2)/sqrt(6), which keeps the hexagonal
symmetry of type A_2; vectors of R^2 are drawn as they are.  Coordinates
are rounded only when written, to six decimals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from html import escape

from .geometry import Polytope, Vector
from .lie import RootSystem

_U1 = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_U2 = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))


class RenderError(ValueError):
    pass


def project(v) -> tuple[float, float]:
    if len(v) == 2:
        return float(v[0]), float(v[1])
    if len(v) == 3:
        if sum(v) != 0:
            raise RenderError(f"{tuple(str(c) for c in v)} is not in the sum-zero plane")
        x = [float(c) for c in v]
        return (sum(a * b for a, b in zip(x, _U1)), sum(a * b for a, b in zip(x, _U2)))
    raise RenderError(f"cannot draw {len(v)}-dimensional data in the plane")


@dataclass
class FigureSpec:
    polytopes: list = field(default_factory=list)  # (Polytope, "solid" | "dashed")
    points: list = field(default_factory=list)  # (Vector, label)
    root_system: RootSystem | None = None  # draws the Weyl walls when set
    frame: bool = True
    size: int = 400
    title: str = ""


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _segments(p: Polytope) -> list[tuple[Vector, Vector]]:
    if p.rank == 2:
        ring = p.ring()
        return [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    return [(p.vertices[i], p.vertices[j]) for i, j in p.edges()]


def render(fig: FigureSpec) -> str:
    """Return an SVG 1.1 document; equal figures always yield the same bytes."""
    for poly, style in fig.polytopes:
        if style not in ("solid", "dashed"):
            raise RenderError(f"unknown line style {style!r}")
        if poly.rank > 2:
            raise RenderError("only polytopes of rank <= 2 can be drawn")
    pts2 = [project(v) for poly, _ in fig.polytopes for v in poly.vertices]
    pts2 += [project(v) for v, _ in fig.points]
    if not pts2:
        raise RenderError("nothing to draw")
    radius = max(max(math.hypot(x, y) for x, y in pts2), 1e-9) * 1.15
    half = fig.size / 2
    k = (half - 20) / radius

    def xy(v) -> str:
        x, y = project(v)
        return f"{_fmt(half + k * x)},{_fmt(half - k * y)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{fig.size}" '
        f'height="{fig.size}" viewBox="0 0 {fig.size} {fig.size}">',
    ]
    if fig.title:
        out.append(f"<title>{escape(fig.title)}</title>")
    out.append(f'<rect x="0" y="0" width="{fig.size}" height="{fig.size}" fill="white"/>')
    if fig.frame:
        out.append('<g stroke="#bbbbbb" stroke-width="0.5">')
        out.append(f'<line x1="0" y1="{_fmt(half)}" x2="{fig.size}" y2="{_fmt(half)}"/>')
        out.append(f'<line x1="{_fmt(half)}" y1="0" x2="{_fmt(half)}" y2="{fig.size}"/>')
        out.append("</g>")
    if fig.root_system is not None:
        out.append('<g stroke="#555555" stroke-width="0.5" class="walls">')
        for a in fig.root_system.positive_roots:
            ax, ay = project(a)
            n = math.hypot(ax, ay)
            dx, dy = -ay / n * radius, ax / n * radius
            out.append(f'<line x1="{_fmt(half - k * dx)}" y1="{_fmt(half + k * dy)}" '
                       f'x2="{_fmt(half + k * dx)}" y2="{_fmt(half - k * dy)}"/>')
        out.append("</g>")
    for poly, style in fig.polytopes:
        dash = ' stroke-dasharray="6,4"' if style == "dashed" else ""
        out.append(f'<g stroke="black" stroke-width="1.5" fill="none" class="{style}"{dash}>')
        for a, b in _segments(poly):
            (x1, y1), (x2, y2) = xy(a).split(","), xy(b).split(",")
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        out.append("</g>")
    if fig.points:
        labels: dict[tuple, list[str]] = {}
        for v, label in fig.points:
            labels.setdefault(tuple(v), []).append(str(label))
        out.append('<g fill="black" font-family="sans-serif" font-size="9">')
        for v in sorted(labels):
            x, y = xy(v).split(",")
            out.append(f'<circle cx="{x}" cy="{y}" r="3"/>')
            text = escape(" ".join(sorted(l for l in labels[v] if l)))
            if text:
                out.append(f'<text x="{_fmt(float(x) + 5)}" y="{_fmt(float(y) - 5)}">{text}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
