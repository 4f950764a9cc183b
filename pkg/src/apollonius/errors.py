"""Exception types for the geometry kernel and the scene format."""

import re


class GeometryError(Exception):
    """Base class for mathematical failures (degenerate input, undefined result)."""

    #: short lowercase phrase used in report records ("error: <label>")
    label: str = "geometry error"

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if "label" not in cls.__dict__:
            cls.label = re.sub(r"(?<!^)(?=[A-Z])", " ", cls.__name__).lower()

    def __str__(self):
        return super().__str__() or self.label


class CollinearInput(GeometryError):
    """Three points that should span a triangle are collinear."""


class IdenticalCircles(GeometryError):
    """Two circles coincide; their intersection is not a finite point set."""


class CoincidentPoints(GeometryError):
    """Two points that should be distinct coincide within tolerance."""


class ConcentricCircles(GeometryError):
    """Radical axis requested for circles with the same center."""


class NonpositiveRatio(GeometryError):
    """Distance-ratio loci require a strictly positive ratio."""


class IsoscelesDegenerate(GeometryError):
    """Bisector feet are undefined when the two adjacent sides have equal length."""


class CollinearABC(GeometryError):
    """The triangle vertices are collinear."""

    label = "collinear vertices"


class NotScalene(GeometryError):
    """Two triangle sides have equal length within tolerance."""


class DegenerateTriangle(GeometryError):
    """Vertices or circle centers do not span a proper triangle."""


class NumericalDegeneracy(GeometryError):
    """An exact-arithmetic certainty failed numerically; no answer is fabricated."""


class IndeterminateRatio(GeometryError):
    """Both powers vanish, so the power ratio is 0:0."""


class InvalidRatio(GeometryError):
    """A projective ratio must not be 0:0 and must have finite components."""


class NotCollinear(GeometryError):
    """The three generalized centers are not collinear.

    Carries the residual of the algebraic balance test when available.
    """

    def __init__(self, message="", residual=None):
        super().__init__(message)
        self.residual = residual


class InternalInconsistency(GeometryError):
    """The algebraic and geometric collinearity tests disagree beyond tolerance."""


class DegenerateK(GeometryError):
    """The power ratio at one circle center is degenerate (zero power or ratio 1)."""

    def __init__(self, index, reason=""):
        super().__init__(f"index {index}: {reason}" if reason else f"index {index}")
        self.index = index
        self.reason = reason
        self.label = f"degenerate ratio at index {index}"


class WindowTooFine(GeometryError):
    """Scan window exceeds the per-axis cell budget."""


class TooFewPoints(GeometryError):
    """Circle fitting needs at least three points."""


class CollinearPoints(GeometryError):
    """Circle fitting received (nearly) collinear points; suspect a line locus."""


class NothingToRender(GeometryError):
    """The scene defines no drawable primitive."""


class SceneError(Exception):
    """Base class for scene-text problems; carries a 1-based line number."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class ParseError(SceneError):
    pass


class UnknownId(SceneError):
    def __init__(self, line, ident, expected="identifier"):
        super().__init__(line, f"unknown {expected} '{ident}'")
        self.ident = ident


class DuplicateId(SceneError):
    def __init__(self, line, ident):
        super().__init__(line, f"duplicate id '{ident}'")
        self.ident = ident


class NegativeRadius(SceneError):
    def __init__(self, line):
        super().__init__(line, "circle radius must be nonnegative")
