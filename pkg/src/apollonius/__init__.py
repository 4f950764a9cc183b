"""Loci of constant circle-power ratio.

The central construction: for two circles and a projective ratio k, the
set of points whose powers with respect to the circles stay in ratio k is
a circle, possibly degenerate (a line, one point, nothing, or the whole
plane). Point-circles reduce it to the classical fixed-distance-ratio
circle. On top of the locus sit the classical triangle results (bisector
feet, tangency from the circumcenter, the Lemoine line, isodynamic
points), their three-circle generalizations (the Menelaus-style
collinearity criterion and the radical-axis concurrence), a brute-force
scan oracle, and a deterministic scene/report/SVG pipeline.
"""

from .core import (DEFAULT_TOL, Circle, Line, Point, Tolerance,
                   circle_intersection, circumcircle, collinear, cross, dist,
                   dist2, dot, line_through, midpoint, point_line_distance)
from .classic import (ClassicApollonius, LemoineData, bisector_feet,
                      classic_apollonius, classic_ratio_locus, lemoine_data)
from .generalized import (DoubleRoot, EmptyLocus, KThresholds, LinearCase,
                          LineLocus, Locus, LocusKind, NoRealRoots,
                          PowerRatio, RealCircle, SinglePoint, TwoRoots,
                          WholePlane, apollonius_of_point, classify,
                          generalized_locus, k_thresholds,
                          power_ratio_of_point)
from .oracle import (FitResult, ScanWindow, VerifyReport, fit_circle,
                     grid_scan, verify_locus)
from .power import power, radical_axis
from .scene import (Query, Record, Report, Scene, emit_report, parse_scene,
                    run_scene)
from .svg import emit_svg
from .triples import (CircleTriple, TripleReport, circumcenter_power,
                      collinearity_balance, generalized_centers,
                      k_radical_axes, lemoine_line_generalized,
                      menelaus_product)
from . import errors

__all__ = [
    "DEFAULT_TOL", "Circle", "Line", "Point", "Tolerance",
    "circle_intersection", "circumcircle", "collinear", "cross", "dist",
    "dist2", "dot", "line_through", "midpoint", "point_line_distance",
    "ClassicApollonius", "LemoineData", "bisector_feet", "classic_apollonius",
    "classic_ratio_locus", "lemoine_data",
    "DoubleRoot", "EmptyLocus", "KThresholds", "LinearCase", "LineLocus",
    "Locus", "LocusKind", "NoRealRoots", "PowerRatio", "RealCircle",
    "SinglePoint", "TwoRoots", "WholePlane", "apollonius_of_point",
    "classify", "generalized_locus", "k_thresholds", "power_ratio_of_point",
    "FitResult", "ScanWindow", "VerifyReport", "fit_circle", "grid_scan",
    "verify_locus",
    "power", "radical_axis",
    "Query", "Record", "Report", "Scene", "emit_report", "parse_scene",
    "run_scene", "emit_svg",
    "CircleTriple", "TripleReport", "circumcenter_power",
    "collinearity_balance", "generalized_centers", "k_radical_axes",
    "lemoine_line_generalized", "menelaus_product",
    "errors",
]
