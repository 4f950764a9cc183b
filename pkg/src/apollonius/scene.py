"""Line-oriented scene text format and deterministic report generation.

Grammar (one statement per line, `#` starts a comment, blank lines ignored):

    circle <id> <cx> <cy> <r>
    point  <id> <x> <y>
    query power       <pid> <cid>
    query radical     <cid> <cid>
    query locus       <cid> <cid> <ratio>
    query classify    <cid> <cid> <ratio>
    query thresholds  <cid> <cid>
    query apollonius  <pid> <cid> <cid>
    query classic     <pid> <pid> <pid>
    query lemoine     <cid> <cid> <cid>
    query concurrence <cid> <cid> <cid>

Ids match [A-Za-z][A-Za-z0-9_]* and are unique across circles and points.
A ratio is "num/den", a plain decimal (den = 1), or "inf" (1:0). Numbers
are decimals with optional sign and exponent. Reports are fixed 9-decimal,
negative zero normalized, one line per query, byte-stable across runs.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Union

from .classic import classic_apollonius, lemoine_data
from .core import DEFAULT_TOL, Circle, Line, Point, Tolerance
from .errors import (DuplicateId, GeometryError, InvalidRatio, NegativeRadius,
                     ParseError, UnknownId)
from .generalized import (DoubleRoot, EmptyLocus, LinearCase, LineLocus,
                          Locus, NoRealRoots, PowerRatio, RealCircle,
                          SinglePoint, TwoRoots, WholePlane, apollonius_of_point,
                          classify, generalized_locus, k_thresholds)
from .power import power, radical_axis
from .triples import CircleTriple, k_radical_axes, lemoine_line_generalized, generalized_centers

_ID_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class PowerQuery:
    point: str
    circle: str


@dataclass(frozen=True)
class RadicalQuery:
    c1: str
    c2: str


@dataclass(frozen=True)
class LocusQuery:
    c1: str
    c2: str
    ratio: PowerRatio


@dataclass(frozen=True)
class ClassifyQuery:
    c1: str
    c2: str
    ratio: PowerRatio


@dataclass(frozen=True)
class ThresholdsQuery:
    c1: str
    c2: str


@dataclass(frozen=True)
class ApolloniusQuery:
    point: str
    c1: str
    c2: str


@dataclass(frozen=True)
class ClassicQuery:
    a: str
    b: str
    c: str


@dataclass(frozen=True)
class LemoineQuery:
    c1: str
    c2: str
    c3: str


@dataclass(frozen=True)
class ConcurrenceQuery:
    c1: str
    c2: str
    c3: str


Query = Union[PowerQuery, RadicalQuery, LocusQuery, ClassifyQuery,
              ThresholdsQuery, ApolloniusQuery, ClassicQuery, LemoineQuery,
              ConcurrenceQuery]


@dataclass(frozen=True)
class Scene:
    circles: dict[str, Circle]
    points: dict[str, Point]
    queries: tuple[Query, ...]
    definition_order: tuple[tuple[str, str], ...]  # ("circle"|"point", id)


@dataclass(frozen=True)
class Record:
    """One query's outcome: report text plus geometry for rendering."""

    text: str
    circles: tuple[Circle, ...] = ()
    lines: tuple[Line, ...] = ()
    markers: tuple[Point, ...] = ()
    error: str | None = None


@dataclass(frozen=True)
class Report:
    records: tuple[Record, ...]


def _parse_number(line_no: int, token: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(line_no, f"invalid number '{token}'") from None
    if not math.isfinite(value):
        raise ParseError(line_no, f"number '{token}' is not finite")
    return value


def _parse_ratio(line_no: int, token: str) -> PowerRatio:
    try:
        if token == "inf":
            return PowerRatio.infinite()
        if "/" in token:
            num_text, _, den_text = token.partition("/")
            return PowerRatio(_parse_number(line_no, num_text),
                              _parse_number(line_no, den_text))
        return PowerRatio(_parse_number(line_no, token), 1.0)
    except InvalidRatio as exc:
        raise ParseError(line_no, f"invalid ratio '{token}': {exc}") from None


def parse_scene(text: str) -> Scene:
    circles: dict[str, Circle] = {}
    points: dict[str, Point] = {}
    queries: list[Query] = []
    order: list[tuple[str, str]] = []

    def new_id(line_no: int, token: str) -> str:
        if not _ID_RE.match(token):
            raise ParseError(line_no, f"invalid id '{token}'")
        if token in circles or token in points:
            raise DuplicateId(line_no, token)
        return token

    def circle_id(line_no: int, token: str) -> str:
        if token not in circles:
            raise UnknownId(line_no, token, "circle")
        return token

    def point_id(line_no: int, token: str) -> str:
        if token not in points:
            raise UnknownId(line_no, token, "point")
        return token

    def expect(line_no: int, tokens: list[str], count: int, form: str):
        if len(tokens) != count:
            raise ParseError(line_no, f"expected '{form}'")

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "circle":
            expect(line_no, tokens, 5, "circle <id> <cx> <cy> <r>")
            ident = new_id(line_no, tokens[1])
            cx = _parse_number(line_no, tokens[2])
            cy = _parse_number(line_no, tokens[3])
            r = _parse_number(line_no, tokens[4])
            if r < 0.0:
                raise NegativeRadius(line_no)
            circles[ident] = Circle(Point(cx, cy), r)
            order.append(("circle", ident))
        elif keyword == "point":
            expect(line_no, tokens, 4, "point <id> <x> <y>")
            ident = new_id(line_no, tokens[1])
            x = _parse_number(line_no, tokens[2])
            y = _parse_number(line_no, tokens[3])
            points[ident] = Point(x, y)
            order.append(("point", ident))
        elif keyword == "query":
            if len(tokens) < 2:
                raise ParseError(line_no, "query needs a kind")
            kind = tokens[1]
            args = tokens[2:]
            if kind == "power":
                expect(line_no, tokens, 4, "query power <pid> <cid>")
                queries.append(PowerQuery(point_id(line_no, args[0]),
                                          circle_id(line_no, args[1])))
            elif kind == "radical":
                expect(line_no, tokens, 4, "query radical <cid> <cid>")
                queries.append(RadicalQuery(circle_id(line_no, args[0]),
                                            circle_id(line_no, args[1])))
            elif kind == "locus":
                expect(line_no, tokens, 5, "query locus <cid> <cid> <ratio>")
                queries.append(LocusQuery(circle_id(line_no, args[0]),
                                          circle_id(line_no, args[1]),
                                          _parse_ratio(line_no, args[2])))
            elif kind == "classify":
                expect(line_no, tokens, 5, "query classify <cid> <cid> <ratio>")
                queries.append(ClassifyQuery(circle_id(line_no, args[0]),
                                             circle_id(line_no, args[1]),
                                             _parse_ratio(line_no, args[2])))
            elif kind == "thresholds":
                expect(line_no, tokens, 4, "query thresholds <cid> <cid>")
                queries.append(ThresholdsQuery(circle_id(line_no, args[0]),
                                               circle_id(line_no, args[1])))
            elif kind == "apollonius":
                expect(line_no, tokens, 5, "query apollonius <pid> <cid> <cid>")
                queries.append(ApolloniusQuery(point_id(line_no, args[0]),
                                               circle_id(line_no, args[1]),
                                               circle_id(line_no, args[2])))
            elif kind == "classic":
                expect(line_no, tokens, 5, "query classic <pid> <pid> <pid>")
                queries.append(ClassicQuery(point_id(line_no, args[0]),
                                            point_id(line_no, args[1]),
                                            point_id(line_no, args[2])))
            elif kind == "lemoine":
                expect(line_no, tokens, 5, "query lemoine <cid> <cid> <cid>")
                queries.append(LemoineQuery(circle_id(line_no, args[0]),
                                            circle_id(line_no, args[1]),
                                            circle_id(line_no, args[2])))
            elif kind == "concurrence":
                expect(line_no, tokens, 5, "query concurrence <cid> <cid> <cid>")
                queries.append(ConcurrenceQuery(circle_id(line_no, args[0]),
                                                circle_id(line_no, args[1]),
                                                circle_id(line_no, args[2])))
            else:
                raise ParseError(line_no, f"unknown query kind '{kind}'")
        else:
            raise ParseError(line_no, f"unknown statement '{keyword}'")

    return Scene(circles=circles, points=points, queries=tuple(queries),
                 definition_order=tuple(order))


def fmt(x: float) -> str:
    """Fixed 9-decimal half-to-even formatting, negative zero normalized."""
    s = f"{x:.9f}"
    return "0.000000000" if s == "-0.000000000" else s


def fmt_point(p: Point) -> str:
    return f"({fmt(p.x)}, {fmt(p.y)})"


def fmt_circle(c: Circle) -> str:
    return f"circle center={fmt_point(c.center)} r={fmt(c.radius)}"


def fmt_line(l: Line) -> str:
    return f"line normal=({fmt(l.nx)}, {fmt(l.ny)}) offset={fmt(l.offset)}"


def fmt_locus(locus: Locus) -> str:
    if isinstance(locus, RealCircle):
        return fmt_circle(locus.circle)
    if isinstance(locus, LineLocus):
        return fmt_line(locus.line)
    if isinstance(locus, SinglePoint):
        return f"point {fmt_point(locus.point)}"
    if isinstance(locus, EmptyLocus):
        return "empty"
    return "plane"


def fmt_thresholds(th) -> str:
    if isinstance(th, TwoRoots):
        return f"two roots k1={fmt(th.k_minus)} k2={fmt(th.k_plus)}"
    if isinstance(th, DoubleRoot):
        return f"double root k={fmt(th.k)}"
    if isinstance(th, LinearCase):
        return f"linear k={fmt(th.k)}"
    return "no real roots"


def _locus_drawables(locus: Locus) -> tuple[tuple[Circle, ...], tuple[Line, ...], tuple[Point, ...]]:
    if isinstance(locus, RealCircle):
        return (locus.circle,), (), ()
    if isinstance(locus, LineLocus):
        return (), (locus.line,), ()
    if isinstance(locus, SinglePoint):
        return (), (), (locus.point,)
    return (), (), ()


def _run_query(s: Scene, q: Query, tol: Tolerance) -> Record:
    if isinstance(q, PowerQuery):
        value = power(s.circles[q.circle], s.points[q.point])
        return Record(text=f"power: {fmt(value)}")
    if isinstance(q, RadicalQuery):
        axis = radical_axis(s.circles[q.c1], s.circles[q.c2], tol)
        return Record(text=f"radical: {fmt_line(axis)}", lines=(axis,))
    if isinstance(q, LocusQuery):
        locus = generalized_locus(s.circles[q.c1], s.circles[q.c2], q.ratio, tol)
        circles, lines, markers = _locus_drawables(locus)
        return Record(text=f"locus: {fmt_locus(locus)}",
                      circles=circles, lines=lines, markers=markers)
    if isinstance(q, ClassifyQuery):
        kind = classify(s.circles[q.c1], s.circles[q.c2], q.ratio, tol)
        return Record(text=f"classify: {kind.value}")
    if isinstance(q, ThresholdsQuery):
        th = k_thresholds(s.circles[q.c1], s.circles[q.c2], tol)
        return Record(text=f"thresholds: {fmt_thresholds(th)}")
    if isinstance(q, ApolloniusQuery):
        locus = apollonius_of_point(s.points[q.point], s.circles[q.c1],
                                    s.circles[q.c2], tol)
        circles, lines, markers = _locus_drawables(locus)
        return Record(text=f"apollonius: {fmt_locus(locus)}",
                      circles=circles, lines=lines, markers=markers)
    if isinstance(q, ClassicQuery):
        result = classic_apollonius(s.points[q.a], s.points[q.b], s.points[q.c], tol)
        circles, lines, markers = _locus_drawables(result.circle_or_line)
        return Record(text=f"classic: {fmt_locus(result.circle_or_line)}",
                      circles=circles, lines=lines, markers=markers)
    if isinstance(q, LemoineQuery):
        triple = CircleTriple((s.circles[q.c1], s.circles[q.c2], s.circles[q.c3]))
        rep = generalized_centers(triple, tol)
        line = lemoine_line_generalized(triple, tol)
        discs = tuple(loc.circle for loc in rep.k_circles if isinstance(loc, RealCircle))
        text = (f"lemoine: {fmt_line(line)}"
                f" m1={fmt_point(rep.m[0])} m2={fmt_point(rep.m[1])} m3={fmt_point(rep.m[2])}")
        return Record(text=text, circles=discs, lines=(line,))
    if isinstance(q, ConcurrenceQuery):
        triple = CircleTriple((s.circles[q.c1], s.circles[q.c2], s.circles[q.c3]))
        rep = generalized_centers(triple, tol)
        l1, _, _, o = k_radical_axes(triple, tol)
        discs = tuple(loc.circle for loc in rep.k_circles if isinstance(loc, RealCircle))
        text = f"concurrence: {fmt_line(l1)} through o={fmt_point(o)}"
        return Record(text=text, circles=discs, lines=(l1,), markers=(o,))
    raise TypeError(f"unhandled query {q!r}")


def run_scene(s: Scene, tol: Tolerance = DEFAULT_TOL) -> Report:
    """Execute all queries in order; geometry errors become error records."""
    records = []
    for q in s.queries:
        try:
            records.append(_run_query(s, q, tol))
        except GeometryError as exc:
            records.append(Record(text=f"error: {exc.label}", error=exc.label))
    return Report(records=tuple(records))


def emit_report(r: Report) -> str:
    """One line per record, trailing newline; byte-identical across runs."""
    return "".join(rec.text + "\n" for rec in r.records)
