"""Brute-force verification of loci by dense scanning.

The scanner evaluates f(X) = den*P1(X) - num*P2(X) on a regular grid,
detects sign changes along grid edges, and refines each crossing by 1-D
bisection. It never touches the closed-form center/radius formulas, so it
can sit on the other side of a dual-route check against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Circle, Point, Tolerance, dist
from .errors import CollinearPoints, TooFewPoints, WindowTooFine
from .generalized import (EmptyLocus, LineLocus, Locus, LocusKind, PowerRatio,
                          RealCircle, SinglePoint, WholePlane)
from .power import power

MAX_CELLS_PER_AXIS = 4096
REFINE_FACTOR = 1e-12
BISECT_ITERS = 60


@dataclass(frozen=True)
class ScanWindow:
    """Axis-aligned scan rectangle with a node spacing.

    The cell budget is (max - min) / step <= 4096 per axis, enforced by
    grid_scan.
    """

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    step: float

    def __post_init__(self):
        vals = (self.x_min, self.x_max, self.y_min, self.y_max, self.step)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("window bounds and step must be finite")
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError("window must have positive extent")
        if not self.step > 0.0:
            raise ValueError("step must be positive")

    def cells_x(self) -> int:
        return int(math.floor((self.x_max - self.x_min) / self.step + 1e-9))

    def cells_y(self) -> int:
        return int(math.floor((self.y_max - self.y_min) / self.step + 1e-9))


@dataclass(frozen=True)
class FitResult:
    circle: Circle
    rms_residual: float
    n_points: int


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking an analytic locus against the scanner."""

    analytic: Locus
    max_residual: float
    n_samples: int
    scan_hits: int
    fit: FitResult | None
    center_error: float | None
    radius_error: float | None
    tags_agree: bool
    geometry_agrees: bool
    notes: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.tags_agree and self.geometry_agrees


def _field(c1: Circle, c2: Circle, k: PowerRatio):
    x1, y1, r1 = c1.center.x, c1.center.y, c1.radius
    x2, y2, r2 = c2.center.x, c2.center.y, c2.radius
    num, den = k.num, k.den

    def f(px, py):
        p1 = (px - x1) ** 2 + (py - y1) ** 2 - r1 * r1
        p2 = (px - x2) ** 2 + (py - y2) ** 2 - r2 * r2
        return den * p1 - num * p2

    return f


def _field_scale(c1: Circle, c2: Circle, k: PowerRatio, w: ScanWindow) -> float:
    reach = max(1.0, abs(w.x_min), abs(w.x_max), abs(w.y_min), abs(w.y_max),
                c1.center.norm() + c1.radius, c2.center.norm() + c2.radius)
    return max(1.0, abs(k.num), abs(k.den)) * reach * reach


def _bisect_edges(f, ax, ay, bx, by, fa, fb, target):
    """Vectorized bisection along edges with fa*fb < 0; returns midpoints."""
    swap = fa > 0.0
    ax, bx = np.where(swap, bx, ax), np.where(swap, ax, bx)
    ay, by = np.where(swap, by, ay), np.where(swap, ay, by)
    for _ in range(BISECT_ITERS):
        mx = 0.5 * (ax + bx)
        my = 0.5 * (ay + by)
        fm = f(mx, my)
        if np.all(np.abs(fm) <= target):
            break
        neg = fm < 0.0
        ax = np.where(neg, mx, ax)
        ay = np.where(neg, my, ay)
        bx = np.where(neg, bx, mx)
        by = np.where(neg, by, my)
    return 0.5 * (ax + bx), 0.5 * (ay + by)


def grid_scan(c1: Circle, c2: Circle, k: PowerRatio, w: ScanWindow,
              tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    """Locus points found by sign-change detection on the window grid.

    Nodes where f vanishes outright count as hits; an edge whose endpoint
    values have opposite signs is refined by bisection. Output order is
    row-major: by row, then column, then node/right-edge/up-edge.
    """
    ncx, ncy = w.cells_x(), w.cells_y()
    if ncx > MAX_CELLS_PER_AXIS or ncy > MAX_CELLS_PER_AXIS:
        raise WindowTooFine(f"{max(ncx, ncy)} cells per axis exceeds {MAX_CELLS_PER_AXIS}")
    xs = w.x_min + w.step * np.arange(ncx + 1)
    ys = w.y_min + w.step * np.arange(ncy + 1)
    grid_x, grid_y = np.meshgrid(xs, ys)  # rows indexed by y
    f = _field(c1, c2, k)
    values = f(grid_x, grid_y)
    target = REFINE_FACTOR * _field_scale(c1, c2, k, w)

    zero = np.abs(values) <= target
    signs = np.sign(values)
    signs[zero] = 0.0

    out_j: list[np.ndarray] = []
    out_i: list[np.ndarray] = []
    out_t: list[np.ndarray] = []
    out_x: list[np.ndarray] = []
    out_y: list[np.ndarray] = []

    zj, zi = np.nonzero(zero)
    out_j.append(zj)
    out_i.append(zi)
    out_t.append(np.zeros_like(zj))
    out_x.append(xs[zi])
    out_y.append(ys[zj])

    hj, hi = np.nonzero(signs[:, :-1] * signs[:, 1:] < 0.0)
    if hj.size:
        px, py = _bisect_edges(f, xs[hi], ys[hj], xs[hi + 1], ys[hj],
                               values[hj, hi], values[hj, hi + 1], target)
        out_j.append(hj)
        out_i.append(hi)
        out_t.append(np.ones_like(hj))
        out_x.append(px)
        out_y.append(py)

    vj, vi = np.nonzero(signs[:-1, :] * signs[1:, :] < 0.0)
    if vj.size:
        px, py = _bisect_edges(f, xs[vi], ys[vj], xs[vi], ys[vj + 1],
                               values[vj, vi], values[vj + 1, vi], target)
        out_j.append(vj)
        out_i.append(vi)
        out_t.append(np.full_like(vj, 2))
        out_x.append(px)
        out_y.append(py)

    jj = np.concatenate(out_j)
    ii = np.concatenate(out_i)
    tt = np.concatenate(out_t)
    px = np.concatenate(out_x)
    py = np.concatenate(out_y)
    order = np.lexsort((tt, ii, jj))
    return [Point(float(px[m]), float(py[m])) for m in order]


def fit_circle(points: list[Point], tol: Tolerance = DEFAULT_TOL) -> FitResult:
    """Algebraic least-squares circle through a point cloud.

    Minimizes the mean squared residual of x^2 + y^2 + D x + E y + F; the
    fit is linear, closed-form, and deterministic. Collinear input is
    rejected since no finite circle exists (suspect a line locus).
    """
    if len(points) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(points)}")
    xy = np.array([[p.x, p.y] for p in points], dtype=float)
    centered = xy - xy.mean(axis=0)
    svals = np.linalg.svd(centered, compute_uv=False)
    if svals[1] <= tol.eps_rel * max(svals[0], 1.0):
        raise CollinearPoints("points are collinear within tolerance")
    a = np.column_stack([xy[:, 0], xy[:, 1], np.ones(len(points))])
    b = -(xy[:, 0] ** 2 + xy[:, 1] ** 2)
    (dd, ee, ff), *_ = np.linalg.lstsq(a, b, rcond=None)
    cx, cy = -dd / 2.0, -ee / 2.0
    r_sq = cx * cx + cy * cy - ff
    radius = math.sqrt(max(r_sq, 0.0))
    residuals = (xy[:, 0] ** 2 + xy[:, 1] ** 2) + dd * xy[:, 0] + ee * xy[:, 1] + ff
    rms = float(np.sqrt(np.mean(residuals ** 2)))
    return FitResult(Circle(Point(float(cx), float(cy)), float(radius)), rms, len(points))


def _clip_line_to_window(line, w: ScanWindow) -> tuple[float, float] | None:
    """Parameter interval of the line inside the window, or None."""
    base = line.base_point()
    d = line.direction()
    t0, t1 = -math.inf, math.inf
    for p0, dp, lo, hi in ((base.x, d.x, w.x_min, w.x_max),
                           (base.y, d.y, w.y_min, w.y_max)):
        if abs(dp) < 1e-300:
            if not (lo <= p0 <= hi):
                return None
            continue
        ta = (lo - p0) / dp
        tb = (hi - p0) / dp
        if ta > tb:
            ta, tb = tb, ta
        t0 = max(t0, ta)
        t1 = min(t1, tb)
    if not (t0 < t1) or math.isinf(t0) or math.isinf(t1):
        return None
    return t0, t1


def _sample_locus(analytic: Locus, w: ScanWindow, n: int = 64) -> list[Point]:
    if isinstance(analytic, RealCircle):
        c = analytic.circle
        return [c.point_at(2.0 * math.pi * j / n) for j in range(n)]
    if isinstance(analytic, LineLocus):
        span = _clip_line_to_window(analytic.line, w)
        if span is None:
            mid = 0.5 * (w.x_min + w.x_max), 0.5 * (w.y_min + w.y_max)
            t_mid = (analytic.line.direction().x * (mid[0] - analytic.line.base_point().x)
                     + analytic.line.direction().y * (mid[1] - analytic.line.base_point().y))
            half = 0.5 * math.hypot(w.x_max - w.x_min, w.y_max - w.y_min)
            span = (t_mid - half, t_mid + half)
        t0, t1 = span
        return [analytic.line.point_at(t0 + (t1 - t0) * j / (n - 1)) for j in range(n)]
    if isinstance(analytic, SinglePoint):
        return [analytic.point]
    return []


def verify_locus(analytic: Locus, c1: Circle, c2: Circle, k: PowerRatio,
                 w: ScanWindow, tol: Tolerance = DEFAULT_TOL) -> VerifyReport:
    """Compare an analytic locus against the scanner; reports, never raises.

    Samples the analytic locus and records the worst defining-equation
    residual, then checks that scan emptiness matches the tag and that
    fitted geometry agrees within roughly the grid resolution.
    """
    notes: list[str] = []
    samples = _sample_locus(analytic, w)
    max_residual = 0.0
    for p in samples:
        r = abs(k.den * power(c1, p) - k.num * power(c2, p))
        max_residual = max(max_residual, r)

    hits = grid_scan(c1, c2, k, w, tol)
    n_nodes = (w.cells_x() + 1) * (w.cells_y() + 1)
    fit: FitResult | None = None
    center_error: float | None = None
    radius_error: float | None = None
    tags_agree = True
    geometry_agrees = True
    band = 2.0 * w.step

    if isinstance(analytic, RealCircle):
        tags_agree = len(hits) > 0
        if not tags_agree:
            notes.append("no scan hits for a circle locus (outside window?)")
        else:
            try:
                fit = fit_circle(hits, tol)
                center_error = dist(fit.circle.center, analytic.circle.center)
                radius_error = abs(fit.circle.radius - analytic.circle.radius)
                geometry_agrees = center_error <= band and radius_error <= band
            except (TooFewPoints, CollinearPoints) as exc:
                geometry_agrees = False
                notes.append(f"circle fit failed: {exc}")
    elif isinstance(analytic, LineLocus):
        tags_agree = len(hits) > 0
        if hits:
            worst = max(analytic.line.distance(p) for p in hits)
            geometry_agrees = worst <= band
            if not geometry_agrees:
                notes.append(f"scan hit strays {worst!r} from the line")
    elif isinstance(analytic, SinglePoint):
        if hits:
            worst = max(dist(p, analytic.point) for p in hits)
            geometry_agrees = worst <= band
            if not geometry_agrees:
                notes.append("scan hits far from the single point")
    elif isinstance(analytic, EmptyLocus):
        tags_agree = len(hits) == 0
        if not tags_agree:
            notes.append(f"{len(hits)} scan hits for an empty locus")
    elif isinstance(analytic, WholePlane):
        tags_agree = len(hits) >= n_nodes // 2
        if not tags_agree:
            notes.append("whole-plane locus but the grid is not saturated")

    return VerifyReport(analytic=analytic, max_residual=max_residual,
                        n_samples=len(samples), scan_hits=len(hits), fit=fit,
                        center_error=center_error, radius_error=radius_error,
                        tags_agree=tags_agree, geometry_agrees=geometry_agrees,
                        notes=tuple(notes))
