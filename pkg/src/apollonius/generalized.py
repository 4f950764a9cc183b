"""Loci of points whose powers with respect to two circles keep a fixed ratio.

For circles G1, G2 and a projective ratio k = num:den, the locus is

    { X : den * P1(X) = num * P2(X) }

which is always a circle, a line, a single point, the empty set, or the
whole plane. With both radii zero this reduces to the classical
fixed-distance-ratio circle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

from .core import DEFAULT_TOL, Circle, Line, Point, Tolerance, dist, dist2
from .errors import IndeterminateRatio, InvalidRatio
from .power import power, radical_axis


@dataclass(frozen=True)
class PowerRatio:
    """Projective pair num:den.

    A point X is on the locus iff den*P1(X) = num*P2(X); this admits ratio
    zero (num = 0, locus is the first circle), infinite ratio (den = 0,
    locus is the second circle), and negative ratios, all without division.
    """

    num: float
    den: float

    def __post_init__(self):
        if not (math.isfinite(self.num) and math.isfinite(self.den)):
            raise InvalidRatio("ratio components must be finite")
        if self.num == 0.0 and self.den == 0.0:
            raise InvalidRatio("ratio 0:0 is indeterminate")

    @staticmethod
    def of(k: float) -> "PowerRatio":
        return PowerRatio(k, 1.0)

    @staticmethod
    def infinite() -> "PowerRatio":
        return PowerRatio(1.0, 0.0)

    def finite_value(self) -> float | None:
        """num/den, or None when the ratio is infinite."""
        if self.den == 0.0:
            return None
        k = self.num / self.den
        return k if math.isfinite(k) else None

    def is_unity(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        k = self.finite_value()
        return k is not None and abs(k - 1.0) <= tol.band(1.0)

    def swapped(self) -> "PowerRatio":
        return PowerRatio(self.den, self.num)

    def isclose(self, other: "PowerRatio", tol: Tolerance = DEFAULT_TOL) -> bool:
        scale = max(abs(self.num), abs(self.den)) * max(abs(other.num), abs(other.den))
        return abs(self.num * other.den - other.num * self.den) <= tol.band(scale)


class LocusKind(enum.Enum):
    CIRCLE = "circle"
    LINE = "line"
    POINT = "point"
    EMPTY = "empty"
    PLANE = "plane"


@dataclass(frozen=True)
class RealCircle:
    circle: Circle
    kind = LocusKind.CIRCLE


@dataclass(frozen=True)
class LineLocus:
    line: Line
    kind = LocusKind.LINE


@dataclass(frozen=True)
class SinglePoint:
    point: Point
    kind = LocusKind.POINT


@dataclass(frozen=True)
class EmptyLocus:
    kind = LocusKind.EMPTY


@dataclass(frozen=True)
class WholePlane:
    kind = LocusKind.PLANE


Locus = Union[RealCircle, LineLocus, SinglePoint, EmptyLocus, WholePlane]


@dataclass(frozen=True)
class TwoRoots:
    k_minus: float
    k_plus: float


@dataclass(frozen=True)
class DoubleRoot:
    k: float


@dataclass(frozen=True)
class NoRealRoots:
    pass


@dataclass(frozen=True)
class LinearCase:
    k: float


KThresholds = Union[TwoRoots, DoubleRoot, NoRealRoots, LinearCase]


def generalized_locus(c1: Circle, c2: Circle, k: PowerRatio,
                      tol: Tolerance = DEFAULT_TOL) -> Locus:
    """Locus of den*P1(X) = num*P2(X), fully classified.

    Branches, with d the center distance and scale = max(d, r1, r2):

    * infinite ratio: the zero set of P2, i.e. the second circle itself
      (its center when it is a point-circle);
    * ratio 1, non-concentric: the radical axis;
    * ratio 1, concentric: the whole plane when the radii agree within
      tolerance, otherwise empty;
    * otherwise a circle centered on the center line at signed position
      k/(k-1) * d from the first center, with

          radius^2 = (k*r2^2 - r1^2)/(k-1) + k*d^2/(k-1)^2,

      reported as a real circle, a single point, or empty according to the
      sign of radius^2 against the band +/- tol*scale^2.
    """
    o1, o2 = c1.center, c2.center
    r1, r2 = c1.radius, c2.radius
    d = dist(o1, o2)
    scale = max(d, r1, r2)
    kv = k.finite_value()
    if kv is None:
        return RealCircle(c2) if r2 > 0.0 else SinglePoint(o2)
    if abs(kv - 1.0) <= tol.band(1.0):
        if d > tol.band(scale):
            return LineLocus(radical_axis(c1, c2, tol))
        if abs(r1 * r1 - r2 * r2) <= tol.band(scale * scale):
            return WholePlane()
        return EmptyLocus()
    t = kv / (kv - 1.0)
    center = Point(o1.x + t * (o2.x - o1.x), o1.y + t * (o2.y - o1.y))
    # factored form of (k*r2^2 - r1^2)/(k-1) + k*d^2/(k-1)^2; safe for huge k
    r_sq = r2 * r2 * t - r1 * r1 / (kv - 1.0) + d * d * t / (kv - 1.0)
    theta = tol.band(scale * scale)
    if r_sq > theta:
        return RealCircle(Circle(center, math.sqrt(r_sq)))
    if r_sq >= -theta:
        return SinglePoint(center)
    return EmptyLocus()


def classify(c1: Circle, c2: Circle, k: PowerRatio,
             tol: Tolerance = DEFAULT_TOL) -> LocusKind:
    """Tag of the locus without its geometry.

    Shares the branch logic of generalized_locus, so the two always agree.
    For a finite ratio other than 1 and r2 > 0 this makes the tag EMPTY
    exactly when k lies strictly between the two threshold roots (beyond
    tolerance), POINT inside the band around a root, and CIRCLE outside.
    """
    if k.num == 0.0 and k.den == 0.0:
        raise InvalidRatio("ratio 0:0 is indeterminate")
    return generalized_locus(c1, c2, k, tol).kind


def k_thresholds(c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL) -> KThresholds:
    """Ratios at which the locus degenerates to a single point.

    These are the real roots of  k^2*r2^2 + k*(d^2 - r1^2 - r2^2) + r1^2.
    Circles that do not meet at two points always have real roots; a pair
    that meets at two points has none. When r2 is zero the quadratic
    degenerates to a linear equation (LinearCase), and to no equation at
    all when that coefficient vanishes too.
    """
    d = dist(c1.center, c2.center)
    r1, r2 = c1.radius, c2.radius
    scale = max(d, r1, r2)
    a = r2 * r2
    b = d * d - r1 * r1 - r2 * r2
    c = r1 * r1
    if r2 > tol.band(scale):
        disc = b * b - 4.0 * a * c
        band4 = tol.band(scale * scale * scale * scale)
        if disc < -band4:
            return NoRealRoots()
        if disc <= band4:
            return DoubleRoot(-b / (2.0 * a))
        sd = math.sqrt(disc)
        q = -(b + math.copysign(sd, b)) / 2.0
        roots = sorted((q / a, c / q))
        return TwoRoots(roots[0], roots[1])
    if abs(b) > tol.band(scale * scale):
        return LinearCase(-c / b)
    return NoRealRoots()


def power_ratio_of_point(a: Point, c1: Circle, c2: Circle,
                         tol: Tolerance = DEFAULT_TOL) -> PowerRatio:
    """The point's own power ratio P1(a) : P2(a), unreduced.

    Undefined (0:0) when the point lies on both circles.
    """
    p1 = power(c1, a)
    p2 = power(c2, a)
    s1 = max(dist2(c1.center, a), c1.radius * c1.radius)
    s2 = max(dist2(c2.center, a), c2.radius * c2.radius)
    if abs(p1) <= tol.band(s1) and abs(p2) <= tol.band(s2):
        raise IndeterminateRatio("point lies on both circles")
    return PowerRatio(p1, p2)


def apollonius_of_point(a: Point, c1: Circle, c2: Circle,
                        tol: Tolerance = DEFAULT_TOL) -> Locus:
    """Locus through `a` whose ratio equals a's own power ratio.

    The defining point always lies on the result.
    """
    return generalized_locus(c1, c2, power_ratio_of_point(a, c1, c2, tol), tol)
