"""Schematic SVG rendering of scenes and their computed loci.

Input circles are drawn solid, computed loci dashed, points as small dots
with their id labels, and marker points as crosses. The y axis is flipped
so figures read the usual way up. Output is deterministic: fixed number
formatting, element order = definition order then query order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Circle, Line, Point
from .errors import NothingToRender
from .scene import Record, Report, Scene, fmt

POINT_DOT_RADIUS = 2.0


@dataclass(frozen=True)
class _Box:
    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def grow(self, x: float, y: float, pad: float = 0.0) -> "_Box":
        return _Box(min(self.x_min, x - pad), min(self.y_min, y - pad),
                    max(self.x_max, x + pad), max(self.y_max, y + pad))


def _flip(p: Point) -> tuple[float, float]:
    return p.x, -p.y


def _flip_line(l: Line) -> tuple[float, float, float]:
    # y -> -y maps {nx x + ny y = c} to {nx x - ny y = c}
    return l.nx, -l.ny, l.offset


def _clip_line(nx: float, ny: float, off: float, box: _Box):
    """Chord of the (already flipped) line inside the box, or None."""
    bx, by = nx * off, ny * off
    dx, dy = -ny, nx
    t0, t1 = -math.inf, math.inf
    for p0, dp, lo, hi in ((bx, dx, box.x_min, box.x_max),
                           (by, dy, box.y_min, box.y_max)):
        if abs(dp) < 1e-300:
            if not (lo <= p0 <= hi):
                return None
            continue
        ta, tb = (lo - p0) / dp, (hi - p0) / dp
        if ta > tb:
            ta, tb = tb, ta
        t0, t1 = max(t0, ta), min(t1, tb)
    if not (t0 < t1) or math.isinf(t0) or math.isinf(t1):
        return None
    return (bx + t0 * dx, by + t0 * dy), (bx + t1 * dx, by + t1 * dy)


def emit_svg(s: Scene, r: Report) -> str:
    """Valid SVG 1.1 for the scene's primitives and the report's geometry."""
    if not s.circles and not s.points:
        raise NothingToRender("scene defines no circles and no points")

    box: _Box | None = None

    def grow(x: float, y: float, pad: float = 0.0):
        nonlocal box
        box = _Box(x - pad, y - pad, x + pad, y + pad) if box is None else box.grow(x, y, pad)

    for circle in s.circles.values():
        x, y = _flip(circle.center)
        grow(x, y, circle.radius)
    for point in s.points.values():
        x, y = _flip(point)
        grow(x, y, POINT_DOT_RADIUS)
    for rec in r.records:
        for circle in rec.circles:
            x, y = _flip(circle.center)
            grow(x, y, circle.radius)
        for marker in rec.markers:
            x, y = _flip(marker)
            grow(x, y)

    width = box.x_max - box.x_min
    height = box.y_max - box.y_min
    pad = 0.1 * max(width, height) if max(width, height) > 0.0 else 1.0
    view = _Box(box.x_min - pad, box.y_min - pad, box.x_max + pad, box.y_max + pad)
    vw = view.x_max - view.x_min
    vh = view.y_max - view.y_min
    stroke = max(vw, vh) / 400.0
    font = max(vw, vh) / 50.0
    dash = f"{fmt(4.0 * stroke)} {fmt(2.0 * stroke)}"

    parts: list[str] = []
    parts.append('<?xml version="1.0" encoding="UTF-8"?>')
    parts.append(f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                 f'viewBox="{fmt(view.x_min)} {fmt(view.y_min)} {fmt(vw)} {fmt(vh)}">')

    def add_circle(c: Circle, dashed: bool):
        x, y = _flip(c.center)
        style = f' stroke-dasharray="{dash}"' if dashed else ""
        parts.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(c.radius)}" '
                     f'fill="none" stroke="black" stroke-width="{fmt(stroke)}"{style}/>')

    def add_dot(p: Point, label: str):
        x, y = _flip(p)
        parts.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(POINT_DOT_RADIUS)}" '
                     f'fill="black"/>')
        parts.append(f'<text x="{fmt(x + 1.5 * POINT_DOT_RADIUS)}" '
                     f'y="{fmt(y - 1.5 * POINT_DOT_RADIUS)}" '
                     f'font-size="{fmt(font)}">{label}</text>')

    def add_line(l: Line):
        clipped = _clip_line(*_flip_line(l), view)
        if clipped is None:
            return
        (x1, y1), (x2, y2) = clipped
        parts.append(f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
                     f'stroke="black" stroke-width="{fmt(stroke)}"/>')

    def add_marker(p: Point):
        x, y = _flip(p)
        arm = 1.5 * POINT_DOT_RADIUS
        d = (f"M {fmt(x - arm)} {fmt(y)} L {fmt(x + arm)} {fmt(y)} "
             f"M {fmt(x)} {fmt(y - arm)} L {fmt(x)} {fmt(y + arm)}")
        parts.append(f'<path d="{d}" stroke="black" stroke-width="{fmt(stroke)}" fill="none"/>')

    for kind, ident in s.definition_order:
        if kind == "circle":
            add_circle(s.circles[ident], dashed=False)
        else:
            add_dot(s.points[ident], ident)

    for rec in r.records:
        for circle in rec.circles:
            add_circle(circle, dashed=True)
        for line in rec.lines:
            add_line(line)
        for marker in rec.markers:
            add_marker(marker)

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
