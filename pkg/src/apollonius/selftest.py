"""Seeded randomized invariant suites, also used by the test suite.

Each suite draws configurations from its own deterministically seeded
generator, checks one family of identities at pinned tolerances, and
reports failures as strings. `run_selftest` aggregates pass/fail counts
with byte-stable output for a fixed seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .classic import bisector_feet, classic_apollonius, lemoine_data
from .core import (Circle, Point, circle_intersection, circumcircle,
                   collinear, dist, point_line_distance)
from .generalized import (NoRealRoots, PowerRatio, RealCircle, SinglePoint,
                          TwoRoots, apollonius_of_point, classify,
                          generalized_locus, k_thresholds)
from .oracle import ScanWindow, fit_circle, grid_scan
from .power import power
from .triples import (CircleTriple, circumcenter_power, collinearity_balance,
                      generalized_centers, k_radical_axes, menelaus_product)

TAU = 2.0 * math.pi


# ---------------------------------------------------------------------------
# configuration generators


def rand_point(rng: random.Random, box: float = 10.0) -> Point:
    return Point(rng.uniform(-box, box), rng.uniform(-box, box))


def rand_circle(rng: random.Random, box: float = 10.0,
                r_min: float = 0.2, r_max: float = 4.0) -> Circle:
    return Circle(rand_point(rng, box), rng.uniform(r_min, r_max))


def rand_ratio(rng: random.Random) -> PowerRatio:
    """Modest projective ratio bounded away from 1 and from 0:0."""
    while True:
        num = rng.uniform(-8.0, 8.0)
        den = rng.uniform(-8.0, 8.0)
        if abs(den) < 0.2 or abs(num) < 1e-3:
            continue
        if abs(num / den - 1.0) < 0.05:
            continue
        return PowerRatio(num, den)


def rand_real_circle_case(rng: random.Random, box: float = 8.0,
                          fit_window: float | None = None):
    """(c1, c2, ratio, locus) with a genuine circle locus.

    With fit_window set, the locus circle is forced to fit inside
    [-fit_window, fit_window]^2 with a sane radius.
    """
    while True:
        c1 = rand_circle(rng, box)
        c2 = rand_circle(rng, box)
        if dist(c1.center, c2.center) < 0.5:
            continue
        ratio = rand_ratio(rng)
        locus = generalized_locus(c1, c2, ratio)
        if not isinstance(locus, RealCircle):
            continue
        disc = locus.circle
        if fit_window is not None:
            reach = max(abs(disc.center.x), abs(disc.center.y)) + disc.radius
            if reach > fit_window - 1.0 or not 0.5 <= disc.radius <= fit_window:
                continue
        elif disc.radius > 1e3:
            continue
        return c1, c2, ratio, locus


def rand_scalene(rng: random.Random, box: float = 10.0):
    """Triangle with pairwise-distinct sides and a healthy area."""
    while True:
        a, b, c = (rand_point(rng, box) for _ in range(3))
        sides = sorted([dist(a, b), dist(a, c), dist(b, c)])
        if sides[0] < 1.0:
            continue
        if sides[1] - sides[0] < 0.08 * sides[2] or sides[2] - sides[1] < 0.08 * sides[2]:
            continue
        area = 0.5 * abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))
        if area < 1.0:
            continue
        return a, b, c


def rand_separated_pair(rng: random.Random, box: float = 8.0):
    """Two circles that do not meet at two points (margin 0.1)."""
    while True:
        c1 = rand_circle(rng, box, 0.3, 3.0)
        r2 = rng.uniform(0.3, 3.0)
        nested = rng.random() < 0.5
        if nested:
            gap = abs(c1.radius - r2) - 0.15
            if gap <= 0.05:
                continue
            d = rng.uniform(0.05, gap)
        else:
            d = abs(c1.radius) + r2 + rng.uniform(0.15, 4.0)
        ang = rng.uniform(0.0, TAU)
        center2 = Point(c1.center.x + d * math.cos(ang), c1.center.y + d * math.sin(ang))
        try:
            return c1, Circle(center2, r2)
        except ValueError:
            continue


def rand_intersecting_pair(rng: random.Random, box: float = 8.0):
    """Two circles meeting at two points (margin 0.1 from tangency)."""
    while True:
        c1 = rand_circle(rng, box, 0.5, 3.0)
        r2 = rng.uniform(0.5, 3.0)
        lo = abs(c1.radius - r2) + 0.1
        hi = c1.radius + r2 - 0.1
        if lo >= hi:
            continue
        d = rng.uniform(lo, hi)
        ang = rng.uniform(0.0, TAU)
        center2 = Point(c1.center.x + d * math.cos(ang), c1.center.y + d * math.sin(ang))
        return c1, Circle(center2, r2)


def _triple_margins_ok(t: CircleTriple) -> bool:
    # keep every K_i well-conditioned: powers away from 0, ratio away from 1
    for i in range(3):
        o = t.centers[i]
        ca = t.circles[(i + 1) % 3]
        cb = t.circles[(i + 2) % 3]
        pa = power(ca, o)
        pb = power(cb, o)
        sa = max(dist(o, ca.center) ** 2, ca.radius ** 2)
        sb = max(dist(o, cb.center) ** 2, cb.radius ** 2)
        if abs(pa) < 0.05 * sa or abs(pb) < 0.05 * sb:
            return False
        if abs(pa - pb) < 0.05 * max(abs(pa), abs(pb)):
            return False
    return True


def _centers_ok(o1: Point, o2: Point, o3: Point) -> bool:
    sides = [dist(o1, o2), dist(o1, o3), dist(o2, o3)]
    if min(sides) < 1.5:
        return False
    area = 0.5 * abs((o2.x - o1.x) * (o3.y - o1.y) - (o2.y - o1.y) * (o3.x - o1.x))
    return area >= 2.0


def rand_triple_equal_radius(rng: random.Random, box: float = 10.0) -> CircleTriple:
    while True:
        o1, o2, o3 = (rand_point(rng, box) for _ in range(3))
        if not _centers_ok(o1, o2, o3):
            continue
        rho = rng.uniform(0.3, 3.0)
        t = CircleTriple((Circle(o1, rho), Circle(o2, rho), Circle(o3, rho)))
        if _triple_margins_ok(t):
            return t


def rand_triple_equilateral(rng: random.Random, box: float = 8.0) -> CircleTriple:
    while True:
        center = rand_point(rng, box)
        side_r = rng.uniform(2.0, 6.0)
        phase = rng.uniform(0.0, TAU)
        centers = [Point(center.x + side_r * math.cos(phase + TAU * j / 3.0),
                         center.y + side_r * math.sin(phase + TAU * j / 3.0))
                   for j in range(3)]
        radii = [rng.uniform(0.3, 3.0) for _ in range(3)]
        t = CircleTriple(tuple(Circle(o, r) for o, r in zip(centers, radii)))
        if _triple_margins_ok(t):
            return t


def rand_triple_generic(rng: random.Random, box: float = 10.0) -> CircleTriple:
    while True:
        o1, o2, o3 = (rand_point(rng, box) for _ in range(3))
        if not _centers_ok(o1, o2, o3):
            continue
        radii = [rng.uniform(0.3, 3.0) for _ in range(3)]
        t = CircleTriple((Circle(o1, radii[0]), Circle(o2, radii[1]), Circle(o3, radii[2])))
        if _triple_margins_ok(t):
            return t


def rotate(p: Point, angle: float, about: Point = Point(0.0, 0.0)) -> Point:
    ca, sa = math.cos(angle), math.sin(angle)
    dx, dy = p.x - about.x, p.y - about.y
    return Point(about.x + ca * dx - sa * dy, about.y + sa * dx + ca * dy)


# ---------------------------------------------------------------------------
# invariant suites: each returns a list of failure strings


def suite_locus_residual(rng: random.Random, n: int) -> list[str]:
    """Sampled points of each circle locus satisfy den*P1 = num*P2."""
    failures = []
    for case in range(n):
        c1, c2, ratio, locus = rand_real_circle_case(rng)
        disc = locus.circle
        worst = 0.0
        for j in range(64):
            p = disc.point_at(TAU * j / 64.0)
            p1 = power(c1, p)
            p2 = power(c2, p)
            resid = abs(ratio.den * p1 - ratio.num * p2)
            worst = max(worst, resid / max(1.0, abs(p1), abs(p2)))
        if worst > 1e-8:
            failures.append(f"case {case}: residual {worst:.3e}")
    return failures


def suite_swap_symmetry(rng: random.Random, n: int) -> list[str]:
    """Swapping the circles and inverting the ratio gives the same locus."""
    failures = []
    for case in range(n):
        c1, c2, ratio, locus = rand_real_circle_case(rng)
        swapped = generalized_locus(c2, c1, ratio.swapped())
        if not isinstance(swapped, RealCircle):
            failures.append(f"case {case}: swapped tag {swapped.kind.value}")
        elif not swapped.circle.isclose(locus.circle):
            failures.append(f"case {case}: swapped circle differs")
    return failures


def suite_center_ratio(rng: random.Random, n: int) -> list[str]:
    """Directed ratio of the center along the center line equals k."""
    failures = []
    for case in range(n):
        c1, c2, ratio, locus = rand_real_circle_case(rng)
        m = locus.circle.center
        d = dist(c1.center, c2.center)
        ux = (c2.center.x - c1.center.x) / d
        uy = (c2.center.y - c1.center.y) / d
        t1 = (m.x - c1.center.x) * ux + (m.y - c1.center.y) * uy
        t2 = (m.x - c2.center.x) * ux + (m.y - c2.center.y) * uy
        k = ratio.num / ratio.den
        if abs(t1 - k * t2) > 1e-9 * max(1.0, abs(t1), abs(k * t2)):
            failures.append(f"case {case}: directed ratio off by {abs(t1 - k * t2):.3e}")
    return failures


def suite_classic_reduction(rng: random.Random, n: int) -> list[str]:
    """Zero-radius circles reduce the power-ratio locus to the classic one."""
    failures = []
    for case in range(n):
        a, b, c = rand_scalene(rng)
        classic = classic_apollonius(a, b, c)
        reduced = apollonius_of_point(a, Circle(b, 0.0), Circle(c, 0.0))
        if classic.m is None or not isinstance(reduced, RealCircle):
            failures.append(f"case {case}: unexpected degenerate branch")
            continue
        m2 = reduced.circle.center
        r2 = reduced.circle.radius
        scale = max(abs(classic.m.x), abs(classic.m.y), classic.r, 1.0)
        err = max(abs(classic.m.x - m2.x), abs(classic.m.y - m2.y), abs(classic.r - r2))
        if err > 1e-12 * scale:
            failures.append(f"case {case}: reduction error {err:.3e} at scale {scale:.3e}")
    return failures


def suite_thresholds(rng: random.Random, n: int) -> list[str]:
    """Roots of the threshold quadratic zero the locus radius; Vieta holds."""
    failures = []
    for case in range(n):
        c1, c2 = rand_separated_pair(rng)
        th = k_thresholds(c1, c2)
        d = dist(c1.center, c2.center)
        scale = max(d, c1.radius, c2.radius)
        if not isinstance(th, TwoRoots):
            failures.append(f"case {case}: expected two roots, got {type(th).__name__}")
            continue
        r1, r2 = c1.radius, c2.radius
        for root in (th.k_minus, th.k_plus):
            rsq = (root * r2 * r2 - r1 * r1) / (root - 1.0) + root * d * d / (root - 1.0) ** 2
            if abs(rsq) > 1e-9 * scale * scale:
                failures.append(f"case {case}: root {root} leaves radius^2 {rsq:.3e}")
        prod = th.k_minus * th.k_plus
        tot = th.k_minus + th.k_plus
        want_prod = (r1 / r2) ** 2
        want_tot = (r1 * r1 + r2 * r2 - d * d) / (r2 * r2)
        if abs(prod - want_prod) > 1e-9 * max(1.0, abs(want_prod)):
            failures.append(f"case {case}: Vieta product off")
        if abs(tot - want_tot) > 1e-9 * max(1.0, abs(want_tot)):
            failures.append(f"case {case}: Vieta sum off")
        mid = 0.5 * (th.k_minus + th.k_plus)
        inside = classify(c1, c2, PowerRatio(mid, 1.0))
        if inside.value != "empty":
            failures.append(f"case {case}: between-roots tag {inside.value}")
        k_out = 2.0 * max(abs(th.k_minus), abs(th.k_plus), 1.0) + 2.0
        outside = classify(c1, c2, PowerRatio(k_out, 1.0))
        if outside.value != "circle":
            failures.append(f"case {case}: beyond-roots tag {outside.value}")
    return failures


def suite_intersecting_pairs(rng: random.Random, n: int) -> list[str]:
    """Two-point-intersecting pairs: no thresholds, every k gives a circle
    through both intersection points."""
    failures = []
    for case in range(n):
        c1, c2 = rand_intersecting_pair(rng)
        th = k_thresholds(c1, c2)
        if not isinstance(th, NoRealRoots):
            failures.append(f"case {case}: intersecting pair has real thresholds")
            continue
        pts = circle_intersection(c1, c2)
        if len(pts) != 2:
            failures.append(f"case {case}: expected 2 intersection points")
            continue
        for _ in range(4):
            ratio = rand_ratio(rng)
            locus = generalized_locus(c1, c2, ratio)
            if not isinstance(locus, RealCircle):
                failures.append(f"case {case}: k={ratio.num / ratio.den:.3f} "
                                f"gave {locus.kind.value}")
                continue
            disc = locus.circle
            for p in pts:
                err = abs(dist(p, disc.center) - disc.radius)
                if err > 1e-8 * max(1.0, disc.radius):
                    failures.append(f"case {case}: intersection point off by {err:.3e}")
    return failures


def suite_triangle_theorems(rng: random.Random, n: int) -> list[str]:
    """Bisector feet on the circle, tangency from the circumcenter, and the
    isodynamic points on all three circles, collinear with the circumcenter."""
    failures = []
    for case in range(n):
        a, b, c = rand_scalene(rng)
        data = lemoine_data(a, b, c)
        k_a = classic_apollonius(a, b, c)
        disc = k_a.circle_or_line.circle
        scale_sq = max(disc.radius ** 2, dist(disc.center, data.o) ** 2,
                       dist(a, data.o) ** 2, 1.0)
        for foot in bisector_feet(a, b, c):
            if abs(power(disc, foot)) > 1e-9 * max(disc.radius ** 2,
                                                   dist(foot, disc.center) ** 2, 1.0):
                failures.append(f"case {case}: foot off the circle")
        if abs(power(disc, a)) > 1e-9 * scale_sq:
            failures.append(f"case {case}: vertex off its own circle")
        if abs(power(disc, data.o) - dist(a, data.o) ** 2) > 1e-9 * scale_sq:
            failures.append(f"case {case}: tangency from circumcenter fails")
        for circ in (classic_apollonius(a, b, c), classic_apollonius(b, c, a),
                     classic_apollonius(c, a, b)):
            body = circ.circle_or_line.circle
            for s in (data.s1, data.s2):
                ssq = max(body.radius ** 2, dist(s, body.center) ** 2, 1.0)
                if abs(power(body, s)) > 1e-8 * ssq:
                    failures.append(f"case {case}: isodynamic point off a circle")
        if not collinear(data.m_a, data.m_b, data.m_c):
            failures.append(f"case {case}: centers not collinear")
        if not collinear(data.o, data.s1, data.s2):
            failures.append(f"case {case}: O, S1, S2 not collinear")
    return failures


def suite_triple_criterion(rng: random.Random, n: int) -> list[str]:
    """The three collinearity predicates agree on all three triple families."""
    failures = []
    makers = [rand_triple_equal_radius, rand_triple_equilateral, rand_triple_generic]
    for case in range(n):
        t = makers[case % 3](rng)
        rep = generalized_centers(t)
        men_ok = abs(rep.menelaus - 1.0) <= 1e-9 * max(1.0, abs(rep.menelaus))
        bal_ok = abs(rep.balance_lhs - rep.balance_rhs) <= 1e-9 * _scale6(t)
        geo_ok = collinear(*rep.m)
        if not (men_ok == bal_ok == geo_ok == rep.collinear):
            failures.append(f"case {case}: predicates disagree "
                            f"(menelaus={men_ok}, balance={bal_ok}, geometric={geo_ok})")
        expected = case % 3 in (0, 1)
        if rep.collinear != expected:
            failures.append(f"case {case}: family expectation violated")
    return failures


def _scale6(t: CircleTriple) -> float:
    o = t.centers
    scale = max(max(t.radii), dist(o[0], o[1]), dist(o[0], o[2]), dist(o[1], o[2]), 1.0)
    return scale ** 6


def suite_concurrence(rng: random.Random, n: int) -> list[str]:
    """Coincident radical axes through the circumcenter for collinear-center
    triples, and the closed-form circumcenter power on every triple."""
    failures = []
    for case in range(n):
        equal_radius = case % 2 == 0
        t = rand_triple_equal_radius(rng) if equal_radius else rand_triple_generic(rng)
        rep = generalized_centers(t)
        o = circumcircle(*t.centers).center
        for i in range(3):
            loc = rep.k_circles[i]
            if not isinstance(loc, RealCircle):
                continue
            direct = power(loc.circle, o)
            closed = circumcenter_power(t, i + 1)
            ssq = max(loc.circle.radius ** 2, dist(o, loc.circle.center) ** 2, 1.0)
            if abs(direct - closed) > 1e-9 * ssq:
                failures.append(f"case {case}: closed form off by {abs(direct - closed):.3e}")
        if equal_radius and rep.collinear:
            l1, l2, l3, o2 = k_radical_axes(t)
            for lx in (l2, l3):
                if not _lines_close(l1, lx, 1e-8):
                    failures.append(f"case {case}: radical axes differ")
            scale = max(dist(o2, rep.m[0]), dist(o2, rep.m[1]), dist(o2, rep.m[2]), 1.0)
            if point_line_distance(l1, o2) > 1e-8 * scale:
                failures.append(f"case {case}: axis misses the circumcenter")
    return failures


def _lines_close(l1, l2, eps: float) -> bool:
    oscale = max(1.0, abs(l1.offset), abs(l2.offset))
    direct = (abs(l1.nx - l2.nx) <= eps and abs(l1.ny - l2.ny) <= eps
              and abs(l1.offset - l2.offset) <= eps * oscale)
    flipped = (abs(l1.nx + l2.nx) <= eps and abs(l1.ny + l2.ny) <= eps
               and abs(l1.offset + l2.offset) <= eps * oscale)
    return direct or flipped


def suite_oracle_scan(rng: random.Random, n: int) -> list[str]:
    """Grid-scan + fit recovers the analytic circle within the grid step."""
    failures = []
    window = ScanWindow(-16.0, 16.0, -16.0, 16.0, 0.1)
    for case in range(n):
        c1, c2, ratio, locus = rand_real_circle_case(rng, box=6.0, fit_window=15.0)
        pts = grid_scan(c1, c2, ratio, window)
        if len(pts) < 8:
            failures.append(f"case {case}: only {len(pts)} scan hits")
            continue
        fit = fit_circle(pts)
        disc = locus.circle
        if dist(fit.circle.center, disc.center) > 2.0 * window.step:
            failures.append(f"case {case}: fitted center far from analytic")
        if abs(fit.circle.radius - disc.radius) > 2.0 * window.step:
            failures.append(f"case {case}: fitted radius far from analytic")
    return failures


@dataclass(frozen=True)
class SuiteResult:
    name: str
    total: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> int:
        return self.total - min(self.total, len(self.failures))


SUITES = (
    ("locus_residual", suite_locus_residual, 100),
    ("swap_symmetry", suite_swap_symmetry, 100),
    ("center_ratio", suite_center_ratio, 100),
    ("classic_reduction", suite_classic_reduction, 100),
    ("thresholds", suite_thresholds, 100),
    ("intersecting_pairs", suite_intersecting_pairs, 50),
    ("triangle_theorems", suite_triangle_theorems, 50),
    ("triple_criterion", suite_triple_criterion, 60),
    ("concurrence", suite_concurrence, 40),
    ("oracle_scan", suite_oracle_scan, 4),
)


def run_suite(name: str, seed: int, n: int | None = None) -> SuiteResult:
    for sname, fn, default_n in SUITES:
        if sname == name:
            rng = random.Random(f"{seed}:{name}")
            failures = fn(rng, n if n is not None else default_n)
            return SuiteResult(name, n if n is not None else default_n, tuple(failures))
    raise KeyError(name)


def run_selftest(seed: int = 0) -> tuple[str, bool]:
    """All suites at their default sizes; returns (text, all_passed)."""
    lines = []
    ok = True
    for name, fn, default_n in SUITES:
        rng = random.Random(f"{seed}:{name}")
        failures = fn(rng, default_n)
        npass = default_n - min(default_n, len(failures))
        lines.append(f"{name}: {npass}/{default_n} pass")
        for message in failures[:5]:
            lines.append(f"  FAIL {message}")
        ok = ok and not failures
    lines.append(f"selftest: {'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n", ok
