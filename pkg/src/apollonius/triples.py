"""Three-circle theorems: the generalized collinearity criterion for the
centers M_i of the loci K_i built at each circle's center, and the
concurrence of the pairwise radical axes of those loci through the
circumcenter of the center triangle.

Indices are cyclic: circle i+3 is circle i. Public index arguments are
1-based; internally everything is 0-based mod 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (DEFAULT_TOL, Circle, Line, Point, Tolerance, circumcircle,
                   collinear, dist, dist2, line_through, point_line_distance)
from .errors import (DegenerateK, DegenerateTriangle, InternalInconsistency,
                     NotCollinear)
from .generalized import (Locus, PowerRatio, RealCircle, SinglePoint,
                          generalized_locus)
from .power import power, radical_axis


@dataclass(frozen=True)
class CircleTriple:
    """Three circles whose centers span a proper triangle."""

    circles: tuple[Circle, Circle, Circle]

    def __post_init__(self):
        o1, o2, o3 = (c.center for c in self.circles)
        scale = max(dist(o1, o2), dist(o1, o3), dist(o2, o3))
        if min(dist(o1, o2), dist(o1, o3), dist(o2, o3)) <= DEFAULT_TOL.band(scale):
            raise DegenerateTriangle("circle centers must be pairwise distinct")
        if collinear(o1, o2, o3):
            raise DegenerateTriangle("circle centers must not be collinear")

    @property
    def centers(self) -> tuple[Point, Point, Point]:
        return tuple(c.center for c in self.circles)

    @property
    def radii(self) -> tuple[float, float, float]:
        return tuple(c.radius for c in self.circles)


@dataclass(frozen=True)
class TripleReport:
    """Everything the collinearity criterion looks at for one triple."""

    m: tuple[Point, Point, Point]
    k_circles: tuple[Locus, Locus, Locus]
    menelaus: float
    balance_lhs: float
    balance_rhs: float
    collinear: bool


def _center_power(t: CircleTriple, i: int, j: int) -> float:
    """Power of center i with respect to circle j (0-based)."""
    return power(t.circles[j % 3], t.centers[i % 3])


def _checked_ratio(t: CircleTriple, i: int, tol: Tolerance) -> PowerRatio:
    """Defining ratio of K_i: powers of O_i w.r.t. circles i+1 and i+2.

    Degenerate when either power vanishes (O_i on a circle) or the two
    powers agree within tolerance (the locus would be a line).
    """
    o = t.centers[i]
    ca = t.circles[(i + 1) % 3]
    cb = t.circles[(i + 2) % 3]
    pa = power(ca, o)
    pb = power(cb, o)
    sa = max(dist2(o, ca.center), ca.radius * ca.radius)
    sb = max(dist2(o, cb.center), cb.radius * cb.radius)
    if abs(pa) <= tol.band(sa):
        raise DegenerateK(i + 1, "center lies on the next circle (zero power)")
    if abs(pb) <= tol.band(sb):
        raise DegenerateK(i + 1, "center lies on the previous circle (zero power)")
    if abs(pa - pb) <= tol.band(max(abs(pa), abs(pb))):
        raise DegenerateK(i + 1, "equal powers: the locus is a line, not a circle")
    return PowerRatio(pa, pb)


def menelaus_product(t: CircleTriple, tol: Tolerance = DEFAULT_TOL) -> float:
    """Product of the three power ratios at the centers.

    Equals 1 exactly when the three locus centers are collinear (directed
    Menelaus criterion on the center triangle's side lines).
    """
    out = 1.0
    for i in range(3):
        r = _checked_ratio(t, i, tol)
        out *= r.num / r.den
    return out


def collinearity_balance(t: CircleTriple) -> tuple[float, float]:
    """Both sides of the algebraic collinearity criterion.

    lhs = sum_i d(i,i+1)^2 d(i,i+2)^2 (r_{i+1}^2 - r_{i+2}^2)
    rhs = sum_i r_{i+1}^2 r_{i+2}^2 (d(i,i+1)^2 - d(i,i+2)^2)

    Equal radii zero both sides termwise; equilateral centers telescope
    both sums to zero.
    """
    o = t.centers
    r2 = [r * r for r in t.radii]
    d2 = [[dist2(o[i], o[j]) for j in range(3)] for i in range(3)]
    lhs = 0.0
    rhs = 0.0
    for i in range(3):
        j = (i + 1) % 3
        k = (i + 2) % 3
        lhs += d2[i][j] * d2[i][k] * (r2[j] - r2[k])
        rhs += r2[j] * r2[k] * (d2[i][j] - d2[i][k])
    return lhs, rhs


def _balance_scale(t: CircleTriple) -> float:
    o = t.centers
    scale = max(max(t.radii), dist(o[0], o[1]), dist(o[0], o[2]), dist(o[1], o[2]))
    return scale ** 6


def generalized_centers(t: CircleTriple, tol: Tolerance = DEFAULT_TOL) -> TripleReport:
    """Centers and loci K_i for all three indices, plus the criterion data.

    The collinear flag requires the algebraic test (Menelaus product within
    tolerance of 1) and the geometric test (cross product of the centers)
    to agree; a disagreement raises InternalInconsistency since that
    equivalence is exactly the theorem under test.
    """
    centers: list[Point] = []
    loci: list[Locus] = []
    for i in range(3):
        ratio = _checked_ratio(t, i, tol)
        loc = generalized_locus(t.circles[(i + 1) % 3], t.circles[(i + 2) % 3], ratio, tol)
        if isinstance(loc, RealCircle):
            centers.append(loc.circle.center)
        elif isinstance(loc, SinglePoint):
            centers.append(loc.point)
        else:
            raise DegenerateK(i + 1, f"locus degenerated to {loc.kind.value}")
        loci.append(loc)

    men = menelaus_product(t, tol)
    lhs, rhs = collinearity_balance(t)
    algebraic = abs(men - 1.0) <= tol.band(1.0)
    geometric = collinear(centers[0], centers[1], centers[2], tol)
    if algebraic != geometric:
        raise InternalInconsistency(
            f"menelaus={men!r} says collinear={algebraic} but geometry says {geometric}")
    return TripleReport(m=tuple(centers), k_circles=tuple(loci),
                        menelaus=men, balance_lhs=lhs, balance_rhs=rhs,
                        collinear=algebraic)


def lemoine_line_generalized(t: CircleTriple, tol: Tolerance = DEFAULT_TOL) -> Line:
    """The common line through the three collinear centers M_i.

    Built through the farthest-apart pair and verified against the third.
    """
    rep = generalized_centers(t, tol)
    if not rep.collinear:
        lhs, rhs = rep.balance_lhs, rep.balance_rhs
        raise NotCollinear(f"balance residual {lhs - rhs!r}", residual=lhs - rhs)
    m = rep.m
    pairs = [(0, 1), (0, 2), (1, 2)]
    i, j = max(pairs, key=lambda p: dist(m[p[0]], m[p[1]]))
    k = 3 - i - j
    line = line_through(m[i], m[j], tol)
    scale = max(dist(m[0], m[1]), dist(m[0], m[2]), dist(m[1], m[2]))
    if point_line_distance(line, m[k]) > tol.band(scale):
        raise InternalInconsistency("collinear centers do not fit a single line")
    return line


def k_radical_axes(t: CircleTriple,
                   tol: Tolerance = DEFAULT_TOL) -> tuple[Line, Line, Line, Point]:
    """Radical axes of the pairs (K_{i+1}, K_{i+2}) plus the circumcenter.

    When the centers M_i are collinear the three axes coincide and pass
    through the circumcenter of the center triangle.
    """
    rep = generalized_centers(t, tol)
    if not rep.collinear:
        lhs, rhs = rep.balance_lhs, rep.balance_rhs
        raise NotCollinear(f"balance residual {lhs - rhs!r}", residual=lhs - rhs)
    discs: list[Circle] = []
    for i, loc in enumerate(rep.k_circles):
        if not isinstance(loc, RealCircle):
            raise DegenerateK(i + 1, f"locus is {loc.kind.value}, not a circle")
        discs.append(loc.circle)
    axes = tuple(radical_axis(discs[(i + 1) % 3], discs[(i + 2) % 3], tol)
                 for i in range(3))
    o = circumcircle(*t.centers, tol).center
    return axes[0], axes[1], axes[2], o


def circumcenter_power(t: CircleTriple, i: int, tol: Tolerance = DEFAULT_TOL) -> float:
    """Power of the centers' circumcenter with respect to K_i, in closed form.

    With k the ratio of O_i's powers taken previous-over-next,

        P(O) = r_circ^2 - (k * r_{i+1}^2 - r_{i+2}^2) / (k - 1),

    which matches power(K_i, circumcenter) computed directly, whether or
    not the centers M_i are collinear.
    """
    if i not in (1, 2, 3):
        raise ValueError("index must be 1, 2, or 3")
    i0 = i - 1
    ratio = _checked_ratio(t, i0, tol)
    loc = generalized_locus(t.circles[(i0 + 1) % 3], t.circles[(i0 + 2) % 3], ratio, tol)
    if not isinstance(loc, RealCircle):
        raise DegenerateK(i, f"locus is {loc.kind.value}, not a circle")
    k = ratio.den / ratio.num  # previous-over-next orientation
    r_next = t.radii[(i0 + 1) % 3]
    r_prev = t.radii[(i0 + 2) % 3]
    circ = circumcircle(*t.centers, tol)
    return circ.radius ** 2 - (k * r_next ** 2 - r_prev ** 2) / (k - 1.0)
