"""Power of a point and the radical axis of two circles."""

from __future__ import annotations

from .core import DEFAULT_TOL, Circle, Line, Point, Tolerance, dist, dist2
from .errors import ConcentricCircles


def power(g: Circle, a: Point) -> float:
    """|center - a|^2 - radius^2: negative inside, zero on, positive outside."""
    return dist2(g.center, a) - g.radius * g.radius


def radical_axis(c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL) -> Line:
    """Locus of equal power to both circles.

    A line perpendicular to the center line, crossing it at signed distance
    a = (d^2 + r1^2 - r2^2) / (2 d) from the first center. Undefined for
    concentric circles.
    """
    d = dist(c1.center, c2.center)
    if d <= tol.band(max(c1.radius, c2.radius)):
        raise ConcentricCircles("radical axis of concentric circles is undefined")
    a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d)
    ux = (c2.center.x - c1.center.x) / d
    uy = (c2.center.y - c1.center.y) / d
    offset = ux * c1.center.x + uy * c1.center.y + a
    return Line.from_normal(ux, uy, offset)
