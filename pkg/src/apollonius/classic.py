"""Classical Apollonius machinery: distance-ratio loci, bisector feet,
Lemoine line, and isodynamic points of a scalene triangle.

Circle centers here are computed as midpoints of the internal and external
division feet, not by fitting; that keeps the feet exactly diametral and
avoids cancellation near the isosceles degeneracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import (DEFAULT_TOL, Circle, Line, Point, Tolerance,
                   circle_intersection, circumcircle, collinear, dist,
                   line_through, midpoint, point_line_distance)
from .errors import (CoincidentPoints, CollinearABC, DegenerateTriangle,
                     IsoscelesDegenerate, NonpositiveRatio, NotScalene,
                     NumericalDegeneracy)
from .generalized import LineLocus, Locus, RealCircle


@dataclass(frozen=True)
class ClassicApollonius:
    """A distance-ratio locus with its center and radius when non-degenerate."""

    circle_or_line: Locus
    m: Optional[Point]
    r: Optional[float]


@dataclass(frozen=True)
class LemoineData:
    """The three classical Apollonius centers, the two isodynamic points,
    the circumcenter, and the line through the centers."""

    m_a: Point
    m_b: Point
    m_c: Point
    s1: Point
    s2: Point
    o: Point
    lemoine: Line


def _perpendicular_bisector(b: Point, c: Point) -> Line:
    d = dist(b, c)
    ux = (c.x - b.x) / d
    uy = (c.y - b.y) / d
    mid = midpoint(b, c)
    return Line.from_normal(ux, uy, ux * mid.x + uy * mid.y)


def _division_feet(b: Point, c: Point, lam: float) -> tuple[Point, Point]:
    # internal and external division of [b, c] in ratio |Xb| : |Xc| = lam
    t_in = lam / (1.0 + lam)
    t_ex = lam / (lam - 1.0)
    internal = Point(b.x + t_in * (c.x - b.x), b.y + t_in * (c.y - b.y))
    external = Point(b.x + t_ex * (c.x - b.x), b.y + t_ex * (c.y - b.y))
    return internal, external


def _ratio_circle(b: Point, c: Point, lam: float) -> tuple[Circle, Point, Point]:
    internal, external = _division_feet(b, c, lam)
    center = midpoint(internal, external)
    radius = 0.5 * dist(internal, external)
    return Circle(center, radius), internal, external


def classic_ratio_locus(b: Point, c: Point, lam: float,
                        tol: Tolerance = DEFAULT_TOL) -> Locus:
    """Locus of |Xb| = lam * |Xc| for lam > 0.

    The perpendicular bisector of [b, c] when lam is 1 within tolerance,
    otherwise a circle whose diameter joins the internal and external
    division feet of [b, c] in ratio lam.
    """
    if not (math.isfinite(lam) and lam > 0.0):
        raise NonpositiveRatio(f"distance ratio must be positive, got {lam}")
    if dist(b, c) <= tol.band(max(b.norm(), c.norm())):
        raise CoincidentPoints("ratio locus needs two distinct base points")
    if abs(lam - 1.0) <= tol.band(1.0):
        return LineLocus(_perpendicular_bisector(b, c))
    circle, _, _ = _ratio_circle(b, c, lam)
    return RealCircle(circle)


def classic_apollonius(a: Point, b: Point, c: Point,
                       tol: Tolerance = DEFAULT_TOL) -> ClassicApollonius:
    """Locus of points X with |Xb|/|Xc| = |ab|/|ac|.

    Degenerates to the perpendicular bisector of [b, c] when a is
    equidistant from b and c; then no center/radius is reported.
    """
    ab = dist(a, b)
    ac = dist(a, c)
    scale = max(ab, ac, dist(b, c))
    if min(ab, ac, dist(b, c)) <= tol.band(scale):
        raise CoincidentPoints("the three points must be pairwise distinct")
    if abs(ab - ac) <= tol.band(scale):
        return ClassicApollonius(LineLocus(_perpendicular_bisector(b, c)), None, None)
    circle, _, _ = _ratio_circle(b, c, ab / ac)
    return ClassicApollonius(RealCircle(circle), circle.center, circle.radius)


def bisector_feet(a: Point, b: Point, c: Point,
                  tol: Tolerance = DEFAULT_TOL) -> tuple[Point, Point]:
    """Where the internal and external bisectors at `a` meet line bc.

    Both feet divide [b, c] in ratio |ab| : |ac| and lie on the classical
    Apollonius circle of `a`. Undefined for |ab| = |ac| (the external
    bisector is parallel to bc) and for collinear vertices.
    """
    if collinear(a, b, c, tol):
        raise CollinearABC("bisector feet need a proper triangle")
    ab = dist(a, b)
    ac = dist(a, c)
    if abs(ab - ac) <= tol.band(max(ab, ac, dist(b, c))):
        raise IsoscelesDegenerate("|ab| = |ac|: external foot is at infinity")
    return _division_feet(b, c, ab / ac)


def lemoine_data(a: Point, b: Point, c: Point,
                 tol: Tolerance = DEFAULT_TOL) -> LemoineData:
    """Apollonius-circle centers, isodynamic points, circumcenter, and the
    line through the centers, for a scalene triangle.

    The isodynamic points are the two common points of the three circles,
    returned in ascending (y, x) order; they are computed by intersecting
    the first two circles and checked against the third.
    """
    if collinear(a, b, c, tol):
        raise DegenerateTriangle("triangle vertices are collinear")
    side_ab = dist(a, b)
    side_ac = dist(a, c)
    side_bc = dist(b, c)
    longest = max(side_ab, side_ac, side_bc)
    if (abs(side_ab - side_ac) <= tol.band(longest)
            or abs(side_ab - side_bc) <= tol.band(longest)
            or abs(side_ac - side_bc) <= tol.band(longest)):
        raise NotScalene("all three sides must have distinct lengths")

    k_a = classic_apollonius(a, b, c, tol)
    k_b = classic_apollonius(b, c, a, tol)
    k_c = classic_apollonius(c, a, b, tol)
    circ_a: Circle = k_a.circle_or_line.circle
    circ_b: Circle = k_b.circle_or_line.circle

    common = circle_intersection(circ_a, circ_b, tol)
    if len(common) != 2:
        raise NumericalDegeneracy("Apollonius circles failed to intersect in two points")
    s1, s2 = common

    o = circumcircle(a, b, c, tol).center
    lem = line_through(k_a.m, k_b.m, tol)
    scale_m = max(dist(k_a.m, k_b.m), dist(k_a.m, k_c.m), dist(k_b.m, k_c.m))
    if point_line_distance(lem, k_c.m) > 1e-6 * max(scale_m, 1.0):
        raise NumericalDegeneracy("third Apollonius center fell off the Lemoine line")
    return LemoineData(k_a.m, k_b.m, k_c.m, s1, s2, o, lem)
