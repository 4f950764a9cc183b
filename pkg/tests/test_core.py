import math
from fractions import Fraction
from itertools import permutations

import pytest

from apollonius import (Circle, Point, Tolerance, circle_intersection,
                        circumcircle, collinear, dist, line_through,
                        point_line_distance)
from apollonius.core import Line
from apollonius.errors import (CoincidentPoints, CollinearInput,
                               IdenticalCircles)


def test_circumcircle_right_triangle():
    # hypotenuse is a diameter
    c = circumcircle(Point(0, 0), Point(4, 0), Point(0, 3))
    assert c.center == Point(2.0, 1.5)
    assert c.radius == pytest.approx(2.5, abs=1e-12)


def test_circumcircle_symmetric():
    c = circumcircle(Point(1, 0), Point(0, 1), Point(-1, 0))
    assert abs(c.center.x) < 1e-12 and abs(c.center.y) < 1e-12
    assert c.radius == pytest.approx(1.0, abs=1e-12)


def test_circumcircle_collinear_rejected():
    with pytest.raises(CollinearInput):
        circumcircle(Point(0, 0), Point(1, 1), Point(2, 2))


def test_circumcircle_permutation_invariant():
    pts = [Point(0.3, -1.7), Point(4.1, 0.2), Point(-2.0, 3.3)]
    base = circumcircle(*pts)
    for perm in permutations(pts):
        c = circumcircle(*perm)
        assert dist(c.center, base.center) <= 1e-9
        assert abs(c.radius - base.radius) <= 1e-9


def test_circumcircle_residuals():
    pts = [Point(0.3, -1.7), Point(4.1, 0.2), Point(-2.0, 3.3)]
    c = circumcircle(*pts)
    for p in pts:
        assert abs(dist(c.center, p) - c.radius) <= 1e-9 * max(1.0, c.radius)


def test_circle_intersection_two_points():
    pts = circle_intersection(Circle(Point(0, 0), 1), Circle(Point(1, 0), 1))
    assert len(pts) == 2
    root3_half = math.sqrt(3) / 2
    # ascending y, then x
    assert pts[0].x == pytest.approx(0.5, abs=1e-12)
    assert pts[0].y == pytest.approx(-root3_half, abs=1e-12)
    assert pts[1].y == pytest.approx(root3_half, abs=1e-12)


def test_circle_intersection_tangent_collapses():
    pts = circle_intersection(Circle(Point(0, 0), 1), Circle(Point(2, 0), 1))
    assert len(pts) == 1
    assert pts[0].x == pytest.approx(1.0, abs=1e-12)
    assert pts[0].y == pytest.approx(0.0, abs=1e-12)


def test_circle_intersection_disjoint():
    assert circle_intersection(Circle(Point(0, 0), 1), Circle(Point(5, 0), 1)) == []


def test_circle_intersection_identical_rejected():
    with pytest.raises(IdenticalCircles):
        circle_intersection(Circle(Point(0, 0), 1), Circle(Point(0, 0), 1))


def test_circle_intersection_symmetric():
    c1 = Circle(Point(0.2, -0.7), 2.0)
    c2 = Circle(Point(1.5, 0.4), 1.3)
    a = circle_intersection(c1, c2)
    b = circle_intersection(c2, c1)
    assert len(a) == len(b) == 2
    for p, q in zip(a, b):
        assert dist(p, q) <= 1e-9


def test_circle_intersection_points_have_zero_power():
    c1 = Circle(Point(0.2, -0.7), 2.0)
    c2 = Circle(Point(1.5, 0.4), 1.3)
    for p in circle_intersection(c1, c2):
        for c in (c1, c2):
            assert abs(dist(p, c.center) ** 2 - c.radius ** 2) <= 1e-9


def test_line_through_y_axis():
    l = line_through(Point(0, 0), Point(0, 5))
    assert (l.nx, l.ny, l.offset) == (1.0, 0.0, 0.0)


def test_line_through_diagonal_canonical():
    l = line_through(Point(0, 0), Point(1, 1))
    inv_root2 = 1.0 / math.sqrt(2)
    assert l.nx == pytest.approx(inv_root2, abs=1e-15)
    assert l.ny == pytest.approx(-inv_root2, abs=1e-15)
    assert l.offset == pytest.approx(0.0, abs=1e-15)


def test_line_through_vertical_offset():
    l = line_through(Point(2, 0), Point(2, 9))
    assert (l.nx, l.ny) == (1.0, 0.0)
    assert l.offset == pytest.approx(2.0, abs=1e-15)


def test_line_through_exactly_symmetric():
    p, q = Point(0.123, -4.56), Point(7.8, 9.01)
    assert line_through(p, q) == line_through(q, p)


def test_line_through_coincident_rejected():
    with pytest.raises(CoincidentPoints):
        line_through(Point(1, 1), Point(1, 1))


def test_point_line_distance_vertical():
    l = line_through(Point(2, 0), Point(2, 9))
    assert point_line_distance(l, Point(5, 7)) == pytest.approx(3.0, abs=1e-12)


def test_point_line_distance_on_line():
    l = line_through(Point(0, 0), Point(3, 1))
    assert point_line_distance(l, Point(6, 2)) <= 1e-12


def test_point_line_distance_projection_oracle():
    # hand oracle: drop the foot of the perpendicular explicitly
    a, b, p = Point(0, 0), Point(1, 1), Point(0, 2)
    ab = b - a
    t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / (ab.x ** 2 + ab.y ** 2)
    foot = Point(a.x + t * ab.x, a.y + t * ab.y)
    expected = dist(p, foot)
    assert expected == pytest.approx(math.sqrt(2), abs=1e-12)
    assert point_line_distance(line_through(a, b), p) == pytest.approx(expected, abs=1e-12)


def test_collinear_basic():
    assert collinear(Point(0, 0), Point(1, 1), Point(2, 2))
    assert not collinear(Point(0, 0), Point(1, 0), Point(0, 1))


def test_collinear_classic_centers():
    # the three classical Apollonius centers of triangle (0,3),(0,0),(4,0);
    # exact rational cross product vanishes
    pts = [(Fraction(-9, 4), Fraction(0)),
           (Fraction(-36, 7), Fraction(48, 7)),
           (Fraction(0), Fraction(-16, 3))]
    (x1, y1), (x2, y2), (x3, y3) = pts
    assert (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1) == 0
    assert collinear(*(Point(float(x), float(y)) for x, y in pts))


def test_rigid_motion_equivariance_circumcircle():
    pts = [Point(0.3, -1.7), Point(4.1, 0.2), Point(-2.0, 3.3)]
    base = circumcircle(*pts)
    ang = 0.83
    ca, sa = math.cos(ang), math.sin(ang)
    shift = Point(3.7, -1.2)

    def move(p):
        return Point(ca * p.x - sa * p.y + shift.x, sa * p.x + ca * p.y + shift.y)

    moved = circumcircle(*(move(p) for p in pts))
    assert dist(moved.center, move(base.center)) <= 1e-9
    assert abs(moved.radius - base.radius) <= 1e-9


def test_line_isclose_canonical_boundary():
    # nearly horizontal normals straddling nx = 0 still compare equal
    l1 = Line.from_normal(1e-14, 1.0, 2.0)
    l2 = Line.from_normal(-1e-14, 1.0, 2.0)
    assert l1.isclose(l2)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(0.0, 1e-9)
    with pytest.raises(ValueError):
        Point(float("nan"), 0.0)
    with pytest.raises(ValueError):
        Circle(Point(0, 0), -1.0)
