"""Grade scales, score classification and grade distributions.

Raw scores are marked on a 0-100 scale and mapped to the five linguistic
grades F < D < C < B < A.  A group is summarised by its per-grade student
counts; dividing by the group size yields the frequency vector y1..y5
(F..A) that feeds every downstream measure.

All values are immutable and all functions are pure, so this module is
safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator

from .errors import ConfigurationError, EmptyGroupError, ScoreRangeError

#: Frequencies of a valid vector must sum to 1 within this tolerance.
FREQUENCY_SUM_TOL = 1e-12


class Grade(IntEnum):
    """The five linguistic grades, ordered worst to best (F=1 .. A=5)."""

    F = 1
    D = 2
    C = 3
    B = 4
    A = 5

    @property
    def index(self) -> int:
        """Ordinal position of the grade: F -> 1, ..., A -> 5."""
        return int(self)


#: Grades from best to worst, used for interval lookups.
_GRADES_DESCENDING = tuple(reversed(tuple(Grade)))


@dataclass(frozen=True)
class GradeScale:
    """A partition of [0, 100] into five score intervals, one per grade.

    ``lower_bounds`` holds each grade's lower bound in F..A order.  Every
    interval is half-open [lo, hi); only the top grade's interval is
    closed at 100, so the five intervals cover [0, 100] with no gaps.
    """

    lower_bounds: tuple[float, ...]

    def __post_init__(self) -> None:
        try:
            bounds = tuple(float(b) for b in self.lower_bounds)
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f"grade bounds must be numbers: {exc}") from exc
        object.__setattr__(self, "lower_bounds", bounds)
        if len(bounds) != 5:
            raise ConfigurationError(
                f"a grade scale needs exactly 5 lower bounds, got {len(bounds)}"
            )
        if bounds[0] != 0:
            raise ConfigurationError(f"the F interval must start at 0, got {bounds[0]}")
        for lower_grade, upper_grade in zip(Grade, tuple(Grade)[1:]):
            lo = bounds[lower_grade.index - 1]
            hi = bounds[upper_grade.index - 1]
            if not lo < hi:
                raise ConfigurationError(
                    "lower bounds must increase strictly with the grade order: "
                    f"{upper_grade.name}={hi} does not exceed {lower_grade.name}={lo}"
                )
        if not bounds[-1] < 100:
            raise ConfigurationError(
                f"the A interval must start below 100, got {bounds[-1]}"
            )

    def interval(self, grade: Grade) -> tuple[float, float]:
        """Return (lo, hi) for ``grade``; hi is 100 for the top grade."""
        lo = self.lower_bounds[grade.index - 1]
        hi = 100.0 if grade is Grade.A else self.lower_bounds[grade.index]
        return lo, hi

    def as_mapping(self) -> dict[str, float]:
        """Lower bounds keyed by grade name, in F..A order."""
        return {g.name: self.lower_bounds[g.index - 1] for g in Grade}


#: F = [0,50), D = [50,60), C = [60,75), B = [75,85), A = [85,100].
DEFAULT_SCALE = GradeScale((0.0, 50.0, 60.0, 75.0, 85.0))


def classify(score: float, scale: GradeScale = DEFAULT_SCALE) -> Grade:
    """Return the grade whose scale interval contains ``score``."""
    if math.isnan(score) or not 0 <= score <= 100:
        raise ScoreRangeError(f"score {score!r} is outside the 0-100 scale")
    for grade in _GRADES_DESCENDING:
        if score >= scale.lower_bounds[grade.index - 1]:
            return grade
    raise AssertionError("unreachable: scale intervals cover [0, 100]")


@dataclass(frozen=True)
class GradeDistribution:
    """Per-grade student counts for one group, in F..A order."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != 5:
            raise ValueError(f"a distribution needs 5 counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError(f"counts must be non-negative, got {counts}")
        if sum(counts) < 1:
            raise EmptyGroupError("a grade distribution needs at least one student")

    @property
    def total(self) -> int:
        """Number of students in the group."""
        return sum(self.counts)

    def count_for(self, grade: Grade) -> int:
        return self.counts[grade.index - 1]

    def as_mapping(self) -> dict[str, int]:
        return {g.name: self.count_for(g) for g in Grade}


@dataclass(frozen=True)
class FrequencyVector:
    """Relative grade frequencies y1..y5 (F..A); each in [0,1], summing to 1."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != 5:
            raise ValueError(f"a frequency vector needs 5 entries, got {len(values)}")
        if any(math.isnan(v) or not 0 <= v <= 1 for v in values):
            raise ValueError(f"frequencies must lie in [0, 1], got {values}")
        total = math.fsum(values)
        if abs(total - 1.0) > FREQUENCY_SUM_TOL:
            raise ValueError(f"frequencies must sum to 1, got {total!r}")

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def value_for(self, grade: Grade) -> float:
        return self.values[grade.index - 1]


def distribution_from_scores(
    scores: Iterable[float], scale: GradeScale = DEFAULT_SCALE
) -> GradeDistribution:
    """Classify every score and tally the per-grade counts."""
    tally: Counter[Grade] = Counter()
    n = 0
    for score in scores:
        tally[classify(score, scale)] += 1
        n += 1
    if n == 0:
        raise EmptyGroupError("cannot build a distribution from an empty score list")
    return GradeDistribution(tuple(tally.get(g, 0) for g in Grade))


def frequencies(dist: GradeDistribution) -> FrequencyVector:
    """Relative frequencies count/total for each grade."""
    n = dist.total
    if n == 0:
        raise EmptyGroupError("cannot compute frequencies for an empty group")
    return FrequencyVector(tuple(c / n for c in dist.counts))
