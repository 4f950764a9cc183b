"""Points, circles, canonical lines, and tolerance-aware predicates.

All values are immutable; every function is pure. Comparisons never use
bare ``==`` on derived floats: they go through a :class:`Tolerance`, whose
band is ``eps_abs + eps_rel * scale`` for a stated characteristic scale
(lengths compare against a length, powers and areas against a squared
length, and so on).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoincidentPoints, CollinearInput, IdenticalCircles


@dataclass(frozen=True)
class Tolerance:
    """Comparison band |x - y| <= eps_abs + eps_rel * scale."""

    eps_abs: float = 1e-9
    eps_rel: float = 1e-9

    def __post_init__(self):
        if not (self.eps_abs > 0.0 and self.eps_rel > 0.0):
            raise ValueError("tolerance components must be positive")

    def band(self, scale: float) -> float:
        return self.eps_abs + self.eps_rel * abs(scale)

    def close(self, x: float, y: float, scale: float) -> bool:
        return abs(x - y) <= self.band(scale)

    def is_zero(self, x: float, scale: float) -> bool:
        return abs(x) <= self.band(scale)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, f: float) -> "Point":
        return Point(self.x * f, self.y * f)

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def dist2(p: Point, q: Point) -> float:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def dot(p: Point, q: Point) -> float:
    return p.x * q.x + p.y * q.y


def cross(p: Point, q: Point) -> float:
    return p.x * q.y - p.y * q.x


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not math.isfinite(self.radius) or self.radius < 0.0:
            raise ValueError(f"circle radius must be finite and >= 0, got {self.radius}")

    def point_at(self, angle: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(angle),
                     self.center.y + self.radius * math.sin(angle))

    def isclose(self, other: "Circle", tol: Tolerance = DEFAULT_TOL) -> bool:
        scale = max(self.radius, other.radius, dist(self.center, other.center))
        return (dist(self.center, other.center) <= tol.band(scale)
                and abs(self.radius - other.radius) <= tol.band(scale))


@dataclass(frozen=True)
class Line:
    """The point set {X : nx*X.x + ny*X.y = offset} with (nx, ny) a unit normal.

    Canonical orientation: nx > 0, or nx = 0 and ny > 0. Two canonical lines
    are equal when normals and offsets match within tolerance; `isclose` also
    accepts the negated form to absorb the nx ~ 0 canonicalization boundary.
    """

    nx: float
    ny: float
    offset: float

    def __post_init__(self):
        n = math.hypot(self.nx, self.ny)
        if not math.isfinite(self.offset) or abs(n - 1.0) > 1e-7:
            raise ValueError("line normal must be a finite unit vector")

    @staticmethod
    def from_normal(nx: float, ny: float, offset: float) -> "Line":
        """Normalize and canonicalize a normal/offset triple."""
        n = math.hypot(nx, ny)
        if n == 0.0 or not (math.isfinite(nx) and math.isfinite(ny) and math.isfinite(offset)):
            raise ValueError("line normal must be nonzero and finite")
        nx, ny, offset = nx / n, ny / n, offset / n
        if nx < 0.0 or (nx == 0.0 and ny < 0.0):
            nx, ny, offset = -nx, -ny, -offset
        # +0.0 normalizes any -0.0 components
        return Line(nx + 0.0, ny + 0.0, offset + 0.0)

    def signed_value(self, p: Point) -> float:
        return self.nx * p.x + self.ny * p.y - self.offset

    def distance(self, p: Point) -> float:
        return abs(self.signed_value(p))

    def contains(self, p: Point, tol: Tolerance = DEFAULT_TOL, scale: float | None = None) -> bool:
        if scale is None:
            scale = max(p.norm(), abs(self.offset))
        return self.distance(p) <= tol.band(scale)

    def direction(self) -> Point:
        return Point(-self.ny, self.nx)

    def base_point(self) -> Point:
        return Point(self.nx * self.offset, self.ny * self.offset)

    def point_at(self, t: float) -> Point:
        return Point(self.nx * self.offset - self.ny * t, self.ny * self.offset + self.nx * t)

    def isclose(self, other: "Line", tol: Tolerance = DEFAULT_TOL) -> bool:
        oscale = max(abs(self.offset), abs(other.offset))
        direct = (abs(self.nx - other.nx) <= tol.band(1.0)
                  and abs(self.ny - other.ny) <= tol.band(1.0)
                  and abs(self.offset - other.offset) <= tol.band(oscale))
        flipped = (abs(self.nx + other.nx) <= tol.band(1.0)
                   and abs(self.ny + other.ny) <= tol.band(1.0)
                   and abs(self.offset + other.offset) <= tol.band(oscale))
        return direct or flipped


def collinear(p1: Point, p2: Point, p3: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the cross product of the two edge vectors vanishes.

    The comparison scale is the largest pairwise distance, squared.
    """
    c = cross(p2 - p1, p3 - p1)
    scale = max(dist(p1, p2), dist(p1, p3), dist(p2, p3))
    return abs(c) <= tol.band(scale * scale)


def line_through(p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
    """Canonical line through two distinct points.

    The pair is ordered internally, so line_through(p, q) and
    line_through(q, p) are bit-identical.
    """
    if dist(p, q) <= tol.band(max(p.norm(), q.norm())):
        raise CoincidentPoints(f"points {p} and {q} coincide")
    a, b = ((p, q) if (p.x, p.y) <= (q.x, q.y) else (q, p))
    dx = b.x - a.x
    dy = b.y - a.y
    return Line.from_normal(dy, -dx, dy * a.x - dx * a.y)


def point_line_distance(l: Line, p: Point) -> float:
    return l.distance(p)


def circumcircle(p1: Point, p2: Point, p3: Point, tol: Tolerance = DEFAULT_TOL) -> Circle:
    """Circle through three non-collinear points.

    The radius is the mean of the three center distances, which keeps the
    result stable under permutation of the arguments.
    """
    if collinear(p1, p2, p3, tol):
        raise CollinearInput("circumcircle needs three non-collinear points")
    d = 2.0 * (p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) + p3.x * (p1.y - p2.y))
    s1 = p1.x * p1.x + p1.y * p1.y
    s2 = p2.x * p2.x + p2.y * p2.y
    s3 = p3.x * p3.x + p3.y * p3.y
    ux = (s1 * (p2.y - p3.y) + s2 * (p3.y - p1.y) + s3 * (p1.y - p2.y)) / d
    uy = (s1 * (p3.x - p2.x) + s2 * (p1.x - p3.x) + s3 * (p2.x - p1.x)) / d
    center = Point(ux, uy)
    radius = (dist(center, p1) + dist(center, p2) + dist(center, p3)) / 3.0
    return Circle(center, radius)


def circle_intersection(c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    """Common points of two non-identical circles, sorted by ascending (y, x).

    Tangency (discriminant within the tolerance band of zero) collapses to a
    single point.
    """
    d = dist(c1.center, c2.center)
    scale = max(c1.radius, c2.radius, d)
    if d <= tol.band(scale):
        if abs(c1.radius - c2.radius) <= tol.band(scale):
            raise IdenticalCircles("circles coincide")
        return []
    a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d)
    h2 = c1.radius * c1.radius - a * a
    theta = tol.band(scale * scale)
    ux = (c2.center.x - c1.center.x) / d
    uy = (c2.center.y - c1.center.y) / d
    foot = Point(c1.center.x + a * ux, c1.center.y + a * uy)
    if h2 < -theta:
        return []
    if h2 <= theta:
        return [foot]
    h = math.sqrt(h2)
    pts = [Point(foot.x - h * uy, foot.y + h * ux),
           Point(foot.x + h * uy, foot.y - h * ux)]
    pts.sort(key=lambda p: (p.y, p.x))
    return pts
