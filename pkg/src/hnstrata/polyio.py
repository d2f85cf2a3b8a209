"""HN polygons of strata and their CSV / SVG renderings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple
from xml.sax.saxutils import escape

from .numvec import MalformedInstance, fmt_rat
from .strata import NotInGamma, Stratum, in_gamma

Point = Tuple[int, Fraction]


@dataclass(frozen=True)
class Polygon:
    breakpoints: Tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((int(x), Fraction(y)) for x, y in self.breakpoints)
        if not pts or pts[0] != (0, 0):
            raise MalformedInstance("polygon must start at (0, 0)")
        if any(pts[i][0] >= pts[i + 1][0] for i in range(len(pts) - 1)):
            raise MalformedInstance("polygon x-coordinates must increase strictly")
        object.__setattr__(self, "breakpoints", pts)

    def slopes(self) -> List[Fraction]:
        p = self.breakpoints
        return [(p[i + 1][1] - p[i][1]) / (p[i + 1][0] - p[i][0]) for i in range(len(p) - 1)]

    @property
    def endpoint(self) -> Point:
        return self.breakpoints[-1]


def polygon_of(s: Stratum) -> Polygon:
    if not in_gamma(s):
        raise NotInGamma(f"{s.label()} is not in the index set")
    pts = [(0, Fraction(0))]
    for t, deg in zip(s.t_js[1:], s.block_degrees):
        pts.append((t, pts[-1][1] + deg))
    return Polygon(tuple(pts))


def is_convex(p: Polygon) -> bool:
    """Strictly decreasing segment slopes, left to right."""
    sl = p.slopes()
    return all(sl[i] > sl[i + 1] for i in range(len(sl) - 1))


def export_csv(p: Polygon) -> str:
    return "x,y\n" + "".join(f"{x},{fmt_rat(y)}\n" for x, y in p.breakpoints)


def _num(v: float) -> str:
    out = f"{v:.12g}"
    return "0" if out == "-0" else out


def export_svg(p: Polygon, width: int = 480, height: int = 320, title: str = "") -> str:
    """Render the polygon as a standalone SVG document.

    Exact coordinates only get rounded here (12 significant digits); labels
    show the exact breakpoint values.
    """
    if width <= 0 or height <= 0:
        raise MalformedInstance("SVG width and height must be positive")
    margin = 40
    xs = [x for x, _ in p.breakpoints]
    ys = [y for _, y in p.breakpoints]
    x_max = max(xs) or 1
    y_lo, y_hi = min(min(ys), 0), max(max(ys), 0)
    y_span = (y_hi - y_lo) or 1
    plot_w, plot_h = max(width - 2 * margin, 1), max(height - 2 * margin, 1)

    def sx(x) -> float:
        return margin + float(Fraction(x) / x_max) * plot_w

    def sy(y) -> float:
        return margin + float((y_hi - Fraction(y)) / y_span) * plot_h

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        lines.append(f"  <title>{escape(title)}</title>")
    ax_y = sy(0)
    lines.append(f'  <line x1="{_num(margin)}" y1="{_num(ax_y)}" x2="{_num(margin + plot_w)}" '
                 f'y2="{_num(ax_y)}" stroke="#888" stroke-width="1"/>')
    lines.append(f'  <line x1="{_num(margin)}" y1="{_num(margin)}" x2="{_num(margin)}" '
                 f'y2="{_num(margin + plot_h)}" stroke="#888" stroke-width="1"/>')
    pts = " ".join(f"{_num(sx(x))},{_num(sy(y))}" for x, y in p.breakpoints)
    lines.append(f'  <polyline points="{pts}" fill="none" stroke="#1f4e8c" stroke-width="2"/>')
    for x, y in p.breakpoints:
        lines.append(f'  <circle cx="{_num(sx(x))}" cy="{_num(sy(y))}" r="3" fill="#1f4e8c"/>')
        lines.append(f'  <text x="{_num(sx(x) + 4)}" y="{_num(sy(y) - 6)}" font-size="11" '
                     f'font-family="monospace">({x}, {escape(fmt_rat(y))})</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
