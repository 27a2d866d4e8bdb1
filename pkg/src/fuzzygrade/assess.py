"""The four assessment measures and the generalized trapezoid scheme.

Given a group's grade frequencies y1..y5 (F..A), four measures grade the
group:

* arithmetic mean of the raw scores (mean performance),
* GPA index          gpa = y2 + 2*y3 + 3*y4 + 4*y5,
* rectangular COG    x_c = (y1 + 3*y2 + 5*y3 + 7*y4 + 9*y5) / 2,
                     y_c = (y1^2 + ... + y5^2) / 2,
* trapezoidal COG    X_c = 7*(y1 + 2*y2 + 3*y3 + 4*y4 + 5*y5) - 2,
  (TFAM)             Y_c = (3/7) * (y1^2 + ... + y5^2).

The COG measures defuzzify the frequency vector through a center of
gravity: the rectangular form places five abutting unit-width bars, the
trapezoidal form five overlapping isosceles trapezoids (base 10, top 4,
left edges 7 apart) aggregated as a weighted particle system so that
borderline scores shared by adjacent grades count for both.  The first
coordinate grades quality, the second measures how concentrated the
group is on few grades.

``generalized_trapezoid`` exposes the closed form for any (base, top,
stride) and reduces exactly to the rectangular scheme at (1, 1, 1), to
the trapezoidal one at (10, 4, 7) and to the triangular variant at
top = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import ConfigurationError, EmptyGroupError, UsageError
from .grading import FrequencyVector


class Measure(Enum):
    """Identifies which measure produced a point, verdict or label."""

    MEAN = "mean"
    GPA = "gpa"
    COG = "cog"
    TFAM = "tfam"
    GENERALIZED = "generalized"


@dataclass(frozen=True)
class AssessmentPoint:
    """A 2-D defuzzified assessment: x grades quality, y concentration."""

    x: float
    y: float
    method: Measure


@dataclass(frozen=True)
class TrapezoidGeometry:
    """Shape parameters of a membership scheme.

    Trapezoid i (i = 1..5 for F..A) stands on the x-axis over
    [(i-1)*stride, (i-1)*stride + base] with a top side of length ``top``
    centred above the base; adjacent trapezoids overlap by
    ``base - stride``.  ``top == base`` gives abutting rectangles when
    ``stride == base``; ``top == 0`` gives triangles.
    """

    base: float = 10.0
    top: float = 4.0
    stride: float = 7.0

    def __post_init__(self) -> None:
        if not self.base > 0:
            raise ConfigurationError(f"base must be positive, got {self.base}")
        if not 0 <= self.top <= self.base:
            raise ConfigurationError(
                f"top must lie in [0, base], got top={self.top} base={self.base}"
            )
        if not 0 < self.stride <= self.base:
            raise ConfigurationError(
                f"stride must lie in (0, base], got stride={self.stride} base={self.base}"
            )

    @property
    def overlap(self) -> float:
        """Shared width of two adjacent shapes."""
        return self.base - self.stride

    def midpoint(self, i: int) -> float:
        """Abscissa of shape i's base midpoint (also of its centroid)."""
        return (i - 1) * self.stride + self.base / 2

    def centroid_height_factor(self) -> float:
        """Centroid height of a shape as a fraction of its height.

        A trapezoid of height h with parallel sides top (upper) and base
        (lower) has its centroid at height h * (2*top + base) / (3 * (top + base))
        above the base.
        """
        return (2 * self.top + self.base) / (3 * (self.top + self.base))

    def as_mapping(self) -> dict[str, float]:
        return {"base": self.base, "top": self.top, "stride": self.stride}


#: Trapezoidal scheme: base 10, top 4, stride 7 (30% of the base shared).
DEFAULT_GEOMETRY = TrapezoidGeometry(10.0, 4.0, 7.0)

#: Rectangular scheme: abutting unit-width bars, equivalent to the COG form.
RECTANGULAR_GEOMETRY = TrapezoidGeometry(1.0, 1.0, 1.0)


def mean_score(scores: Iterable[float]) -> float:
    """Arithmetic mean of the raw scores."""
    scores = tuple(scores)
    if not scores:
        raise EmptyGroupError("cannot average an empty score list")
    return math.fsum(scores) / len(scores)


def gpa(y: FrequencyVector) -> float:
    """GPA index y2 + 2*y3 + 3*y4 + 4*y5; ranges over [0, 4]."""
    return math.fsum((i - 1) * v for i, v in enumerate(y, start=1))


def _sum_of_squares(y: Iterable[float]) -> float:
    return math.fsum(v * v for v in y)


def cog_rectangular(y: FrequencyVector) -> AssessmentPoint:
    """Center of gravity of the five abutting unit-width frequency bars."""
    x = 0.5 * math.fsum((2 * i - 1) * v for i, v in enumerate(y, start=1))
    return AssessmentPoint(x, 0.5 * _sum_of_squares(y), Measure.COG)


def tfam(y: FrequencyVector) -> AssessmentPoint:
    """Trapezoidal assessment point X_c = 7*sum(i*y_i) - 2, Y_c = (3/7)*sum(y_i^2)."""
    x = 7.0 * math.fsum(i * v for i, v in enumerate(y, start=1)) - 2.0
    return AssessmentPoint(x, (3.0 / 7.0) * _sum_of_squares(y), Measure.TFAM)


def generalized_trapezoid(
    y: FrequencyVector, geom: TrapezoidGeometry
) -> AssessmentPoint:
    """Aggregate COG of the scheme drawn with an arbitrary geometry.

    Each shape contributes its centroid weighted by its area
    y_i * (top + base) / 2, which gives the closed form
    X = sum(y_i * midpoint_i) and Y = height_factor * sum(y_i^2).
    """
    x = math.fsum(v * geom.midpoint(i) for i, v in enumerate(y, start=1))
    return AssessmentPoint(
        x, geom.centroid_height_factor() * _sum_of_squares(y), Measure.GENERALIZED
    )


@dataclass(frozen=True)
class RegionTriangle:
    """The three reference vertices bracketing a method's assessment points.

    ``worst`` is the point of the all-F group, ``ideal`` the point of the
    all-A group and ``minimum`` the published lowest-concentration vertex.
    """

    worst: AssessmentPoint
    minimum: AssessmentPoint
    ideal: AssessmentPoint

    @property
    def method(self) -> Measure:
        return self.worst.method

    def vertices(self) -> tuple[tuple[float, float], ...]:
        return tuple((p.x, p.y) for p in (self.worst, self.minimum, self.ideal))


COG_TRIANGLE = RegionTriangle(
    worst=AssessmentPoint(0.5, 0.5, Measure.COG),
    minimum=AssessmentPoint(2.5, 0.1, Measure.COG),
    ideal=AssessmentPoint(4.5, 0.5, Measure.COG),
)

# Published convention keeps the minimum vertex at x = 15 although the
# closed form puts the uniform-distribution point at x = 19; the
# paper-check command reports the discrepancy.
TFAM_TRIANGLE = RegionTriangle(
    worst=AssessmentPoint(5.0, 3.0 / 7.0, Measure.TFAM),
    minimum=AssessmentPoint(15.0, 3.0 / 35.0, Measure.TFAM),
    ideal=AssessmentPoint(33.0, 3.0 / 7.0, Measure.TFAM),
)


def region_triangle(method: Measure) -> RegionTriangle:
    """Reference triangle (worst, minimum, ideal vertices) for a COG method."""
    if method is Measure.COG:
        return COG_TRIANGLE
    if method is Measure.TFAM:
        return TFAM_TRIANGLE
    raise UsageError(f"no region triangle is defined for method {method.value!r}")
