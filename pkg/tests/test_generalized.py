import math

import pytest

from apollonius import (Circle, DoubleRoot, EmptyLocus, LinearCase, LineLocus,
                        LocusKind, NoRealRoots, Point, PowerRatio, RealCircle,
                        ScanWindow, SinglePoint, TwoRoots, WholePlane,
                        apollonius_of_point, circle_intersection, circumcircle,
                        classify, dist, fit_circle, generalized_locus,
                        grid_scan, k_thresholds, power, power_ratio_of_point)
from apollonius.errors import IndeterminateRatio, InvalidRatio

UNIT_0 = Circle(Point(0, 0), 1)
UNIT_2 = Circle(Point(2, 0), 1)
UNIT_3 = Circle(Point(3, 0), 1)
UNIT_4 = Circle(Point(4, 0), 1)


def test_power_ratio_of_point_values():
    r = power_ratio_of_point(Point(2, 2), UNIT_0, UNIT_3)
    assert (r.num, r.den) == (7.0, 4.0)


def test_power_ratio_on_first_circle_only():
    r = power_ratio_of_point(Point(1, 0), UNIT_0, UNIT_3)
    assert abs(r.num) <= 1e-12
    assert r.finite_value() == pytest.approx(0.0, abs=1e-12)


def test_power_ratio_indeterminate_on_both():
    p = circle_intersection(UNIT_0, Circle(Point(1, 0), 1))[0]
    with pytest.raises(IndeterminateRatio):
        power_ratio_of_point(p, UNIT_0, Circle(Point(1, 0), 1))


def test_invalid_ratio_rejected():
    with pytest.raises(InvalidRatio):
        PowerRatio(0.0, 0.0)
    with pytest.raises(InvalidRatio):
        PowerRatio(float("inf"), 1.0)


def test_locus_k2_analytic():
    locus = generalized_locus(UNIT_0, UNIT_3, PowerRatio(2, 1))
    assert isinstance(locus, RealCircle)
    assert dist(locus.circle.center, Point(6, 0)) <= 1e-12
    assert locus.circle.radius == pytest.approx(math.sqrt(19), rel=1e-12)
    # spot point: P1 = 2 * P2 there
    spot = Point(6 + math.sqrt(19), 0.0)
    assert power(UNIT_0, spot) == pytest.approx(2 * power(UNIT_3, spot), rel=1e-12)
    assert power(UNIT_0, spot) == pytest.approx(54 + 12 * math.sqrt(19), rel=1e-12)


def test_locus_k2_grid_scan_oracle():
    # independent route: dense scan of the defining equation, then a fit
    window = ScanWindow(-12.0, 12.0, -12.0, 12.0, 0.1)
    pts = grid_scan(UNIT_0, UNIT_3, PowerRatio(2, 1), window)
    assert len(pts) >= 100
    for p in pts:
        assert abs(dist(p, Point(6, 0)) - math.sqrt(19)) <= 1e-6
    fit = fit_circle(pts)
    assert dist(fit.circle.center, Point(6, 0)) <= 1e-4
    assert abs(fit.circle.radius - math.sqrt(19)) <= 1e-4


def test_locus_tangency_single_point():
    locus = generalized_locus(UNIT_0, UNIT_2, PowerRatio(-1, 1))
    assert isinstance(locus, SinglePoint)
    assert dist(locus.point, Point(1, 0)) <= 1e-12


def test_locus_empty():
    locus = generalized_locus(UNIT_0, UNIT_4, PowerRatio(-1, 1))
    assert isinstance(locus, EmptyLocus)


def test_locus_zero_ratio_is_first_circle():
    locus = generalized_locus(UNIT_0, UNIT_3, PowerRatio(0, 1))
    assert isinstance(locus, RealCircle)
    assert locus.circle.isclose(UNIT_0)


def test_locus_unit_ratio_is_radical_axis():
    locus = generalized_locus(UNIT_0, UNIT_4, PowerRatio(1, 1))
    assert isinstance(locus, LineLocus)
    assert (locus.line.nx, locus.line.ny) == (1.0, 0.0)
    assert locus.line.offset == pytest.approx(2.0, abs=1e-12)


def test_locus_infinite_ratio_is_second_circle():
    locus = generalized_locus(UNIT_0, UNIT_3, PowerRatio.infinite())
    assert isinstance(locus, RealCircle)
    assert locus.circle.isclose(UNIT_3)
    degenerate = generalized_locus(UNIT_0, Circle(Point(3, 0), 0.0), PowerRatio.infinite())
    assert isinstance(degenerate, SinglePoint)
    assert dist(degenerate.point, Point(3, 0)) <= 1e-12


def test_locus_concentric_unit_ratio():
    same = generalized_locus(Circle(Point(1, 1), 2), Circle(Point(1, 1), 2), PowerRatio(1, 1))
    assert isinstance(same, WholePlane)
    different = generalized_locus(Circle(Point(1, 1), 2), Circle(Point(1, 1), 1), PowerRatio(1, 1))
    assert isinstance(different, EmptyLocus)


def test_locus_concentric_general_ratio():
    # concentric, k != 1: radius^2 = (k r2^2 - r1^2)/(k - 1)
    locus = generalized_locus(Circle(Point(1, 1), 2), Circle(Point(1, 1), 1), PowerRatio(5, 1))
    assert isinstance(locus, RealCircle)
    assert dist(locus.circle.center, Point(1, 1)) <= 1e-12
    assert locus.circle.radius == pytest.approx(math.sqrt((5 - 4) / 4), rel=1e-12)


def _radius_sq(c1, c2, k):
    d = dist(c1.center, c2.center)
    return ((k * c2.radius ** 2 - c1.radius ** 2) / (k - 1)
            + k * d * d / (k - 1) ** 2)


def _bisect_root(f, lo, hi):
    assert f(lo) * f(hi) < 0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def test_k_thresholds_two_roots_bisection_oracle():
    # scan the radius expression for sign changes, refine by bisection
    f = lambda k: _radius_sq(UNIT_0, UNIT_4, k)
    lo_root = _bisect_root(f, -20.0, -7.0)
    hi_root = _bisect_root(f, -7.0, -1e-3)
    assert lo_root == pytest.approx(-7 - math.sqrt(48), abs=1e-9)
    assert hi_root == pytest.approx(-7 + math.sqrt(48), abs=1e-9)
    th = k_thresholds(UNIT_0, UNIT_4)
    assert isinstance(th, TwoRoots)
    assert th.k_minus == pytest.approx(lo_root, abs=1e-9)
    assert th.k_plus == pytest.approx(hi_root, abs=1e-9)
    assert th.k_minus * th.k_plus == pytest.approx(1.0, rel=1e-12)  # Vieta, r1 = r2


def test_k_thresholds_double_root_at_tangency():
    th = k_thresholds(UNIT_0, UNIT_2)
    assert isinstance(th, DoubleRoot)
    assert th.k == pytest.approx(-1.0, abs=1e-12)


def test_k_thresholds_no_real_roots_when_intersecting():
    assert isinstance(k_thresholds(UNIT_0, Circle(Point(1, 0), 1)), NoRealRoots)


def test_k_thresholds_linear_case_point_circle():
    # r2 = 0 degenerates the quadratic: k*(d^2 - r1^2) + r1^2 = 0
    th = k_thresholds(UNIT_0, Circle(Point(3, 0), 0.0))
    assert isinstance(th, LinearCase)
    assert th.k == pytest.approx(-1.0 / 8.0, rel=1e-12)
    locus = generalized_locus(UNIT_0, Circle(Point(3, 0), 0.0), PowerRatio(th.k, 1.0))
    assert isinstance(locus, SinglePoint)


def test_classify_matches_construction():
    assert classify(UNIT_0, UNIT_4, PowerRatio(-1, 1)) is LocusKind.EMPTY
    assert classify(UNIT_0, UNIT_4, PowerRatio(2, 1)) is LocusKind.CIRCLE
    assert classify(UNIT_0, UNIT_4, PowerRatio(1, 1)) is LocusKind.LINE
    # radius^2 at k = 2 from the construction: 1 + 2*16/1 = 33
    locus = generalized_locus(UNIT_0, UNIT_4, PowerRatio(2, 1))
    assert locus.circle.radius ** 2 == pytest.approx(33.0, rel=1e-12)


def test_apollonius_of_point_circle():
    locus = apollonius_of_point(Point(2, 2), UNIT_0, UNIT_3)
    assert isinstance(locus, RealCircle)
    assert dist(locus.circle.center, Point(7, 0)) <= 1e-10
    assert locus.circle.radius == pytest.approx(math.sqrt(29), rel=1e-12)
    # the defining point sits on its own locus
    assert dist(Point(2, 2), locus.circle.center) ** 2 == pytest.approx(29.0, rel=1e-12)


def test_apollonius_of_point_circumcircle_crosscheck():
    # when the base circles meet at S1, S2 the locus is the circumcircle of
    # S1, a, S2 (independent construction through three points)
    c2 = Circle(Point(1, 0), 1)
    a = Point(2, 2)
    locus = apollonius_of_point(a, UNIT_0, c2)
    s1, s2 = circle_intersection(UNIT_0, c2)
    reference = circumcircle(s1, a, s2)
    assert dist(locus.circle.center, reference.center) <= 1e-9
    assert abs(locus.circle.radius - reference.radius) <= 1e-9


def test_apollonius_of_point_on_first_circle():
    locus = apollonius_of_point(Point(1, 0), UNIT_0, UNIT_3)
    assert isinstance(locus, RealCircle)
    assert locus.circle.isclose(UNIT_0)


def test_swap_symmetry():
    locus = generalized_locus(UNIT_0, UNIT_3, PowerRatio(7, 4))
    swapped = generalized_locus(UNIT_3, UNIT_0, PowerRatio(4, 7))
    assert isinstance(locus, RealCircle) and isinstance(swapped, RealCircle)
    assert locus.circle.isclose(swapped.circle)


def test_similarity_equivariance():
    s = 2.5
    locus = generalized_locus(UNIT_0, UNIT_3, PowerRatio(2, 1))
    scaled = generalized_locus(Circle(Point(0, 0), s), Circle(Point(3 * s, 0), s),
                               PowerRatio(2, 1))
    assert isinstance(scaled, RealCircle)
    assert dist(scaled.circle.center, Point(s * 6, 0)) <= 1e-9
    assert scaled.circle.radius == pytest.approx(s * locus.circle.radius, rel=1e-12)


def test_center_ratio_law():
    # directed ratio of the center along the center line equals k
    locus = generalized_locus(UNIT_0, UNIT_3, PowerRatio(2, 1))
    m = locus.circle.center
    t1 = m.x - 0.0
    t2 = m.x - 3.0
    assert t1 / t2 == pytest.approx(2.0, rel=1e-12)
