"""Command-line front end.

Subcommands:
  run <scene-file> [--svg <path>] [--tol <float>]   scene report (+ optional SVG)
  locus --c1 cx,cy,r --c2 cx,cy,r --k <ratio>       one-shot locus
  thresholds --c1 ... --c2 ...                      degenerate-ratio thresholds
  classic --a x,y --b x,y --c x,y                   classical ratio circle
  verify --c1 ... --c2 ... --k ... --window x0,x1,y0,y1 --step s
                                                    analytic vs. scan report
  selftest [--seed <int>]                           seeded invariant suites

Exit codes: 0 success, 1 usage or parse error, 2 mathematical error on a
one-shot subcommand, 3 selftest failure. Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .classic import classic_apollonius
from .core import Circle, Point, Tolerance
from .errors import GeometryError, InvalidRatio, SceneError
from .generalized import PowerRatio, generalized_locus, k_thresholds
from .oracle import ScanWindow, verify_locus
from .scene import (emit_report, fmt, fmt_locus, fmt_thresholds, parse_scene,
                    run_scene)
from .selftest import run_selftest
from .svg import emit_svg


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_floats(text: str, count: int, what: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != count:
        raise _UsageError(f"{what} needs {count} comma-separated numbers, got '{text}'")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise _UsageError(f"invalid number in {what}: '{text}'") from None
    if not all(math.isfinite(v) for v in values):
        raise _UsageError(f"{what} must be finite: '{text}'")
    return values


def _parse_circle(text: str) -> Circle:
    cx, cy, r = _parse_floats(text, 3, "circle")
    if r < 0.0:
        raise _UsageError(f"circle radius must be nonnegative: '{text}'")
    return Circle(Point(cx, cy), r)


def _parse_point(text: str) -> Point:
    x, y = _parse_floats(text, 2, "point")
    return Point(x, y)


def _parse_ratio(text: str) -> PowerRatio:
    try:
        if text == "inf":
            return PowerRatio.infinite()
        if "/" in text:
            num_text, _, den_text = text.partition("/")
            return PowerRatio(float(num_text), float(den_text))
        return PowerRatio(float(text), 1.0)
    except (ValueError, InvalidRatio) as exc:
        raise _UsageError(f"invalid ratio '{text}': {exc}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="apollonius", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scene file and print its report")
    p_run.add_argument("scene")
    p_run.add_argument("--svg", default=None, help="also write an SVG rendering")
    p_run.add_argument("--tol", type=float, default=None,
                       help="override both tolerance components")

    for name in ("locus", "thresholds", "verify"):
        p = sub.add_parser(name)
        p.add_argument("--c1", required=True, help="first circle as cx,cy,r")
        p.add_argument("--c2", required=True, help="second circle as cx,cy,r")
        if name in ("locus", "verify"):
            p.add_argument("--k", required=True, help="ratio: num/den, decimal, or inf")
        if name == "verify":
            p.add_argument("--window", required=True, help="x0,x1,y0,y1")
            p.add_argument("--step", required=True, type=float)

    p_classic = sub.add_parser("classic")
    p_classic.add_argument("--a", required=True, help="apex point as x,y")
    p_classic.add_argument("--b", required=True, help="first base point as x,y")
    p_classic.add_argument("--c", required=True, help="second base point as x,y")

    p_self = sub.add_parser("selftest", help="run the seeded invariant suites")
    p_self.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_run(args) -> int:
    try:
        with open(args.scene, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read '{args.scene}': {exc}", file=sys.stderr)
        return 1
    try:
        scene = parse_scene(text)
    except SceneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    tol = Tolerance(args.tol, args.tol) if args.tol is not None else Tolerance()
    report = run_scene(scene, tol)
    sys.stdout.write(emit_report(report))
    if args.svg is not None:
        try:
            rendered = emit_svg(scene, report)
        except GeometryError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    return 0


def _cmd_locus(args) -> int:
    locus = generalized_locus(_parse_circle(args.c1), _parse_circle(args.c2),
                              _parse_ratio(args.k))
    print(fmt_locus(locus))
    return 0


def _cmd_thresholds(args) -> int:
    print(fmt_thresholds(k_thresholds(_parse_circle(args.c1), _parse_circle(args.c2))))
    return 0


def _cmd_classic(args) -> int:
    result = classic_apollonius(_parse_point(args.a), _parse_point(args.b),
                                _parse_point(args.c))
    print(fmt_locus(result.circle_or_line))
    return 0


def _cmd_verify(args) -> int:
    c1 = _parse_circle(args.c1)
    c2 = _parse_circle(args.c2)
    ratio = _parse_ratio(args.k)
    x0, x1, y0, y1 = _parse_floats(args.window, 4, "window")
    try:
        window = ScanWindow(x0, x1, y0, y1, args.step)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    analytic = generalized_locus(c1, c2, ratio)
    report = verify_locus(analytic, c1, c2, ratio, window)
    print(f"analytic: {fmt_locus(analytic)}")
    print(f"max residual: {report.max_residual:.3e} over {report.n_samples} samples")
    print(f"scan hits: {report.scan_hits}")
    if report.fit is not None:
        print(f"fitted: {fmt(report.fit.circle.center.x)},{fmt(report.fit.circle.center.y)} "
              f"r={fmt(report.fit.circle.radius)} rms={report.fit.rms_residual:.3e}")
        print(f"center error: {report.center_error:.3e}")
        print(f"radius error: {report.radius_error:.3e}")
    for note in report.notes:
        print(f"note: {note}")
    print(f"agreement: {'yes' if report.ok else 'NO'}")
    return 0


def _cmd_selftest(args) -> int:
    text, ok = run_selftest(args.seed)
    sys.stdout.write(text)
    return 0 if ok else 3


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    handlers = {
        "run": _cmd_run,
        "locus": _cmd_locus,
        "thresholds": _cmd_thresholds,
        "classic": _cmd_classic,
        "verify": _cmd_verify,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
