"""Pairwise comparison, ranking and quality labelling of assessed groups.

Two groups assessed by the same COG method are compared with a
three-rule criterion: the greater first coordinate wins; if the first
coordinates tie, the second coordinate decides, and the preferred
direction depends on which side of the method's threshold the shared
first coordinate lies (at or above it a more concentrated group wins,
below it a less concentrated one does).  A group's quality is labelled
by comparing its measure against half the measure's ideal value.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .assess import AssessmentPoint, Measure
from .errors import UsageError

#: Default tolerance for treating two coordinates as equal.
DEFAULT_EPS = 1e-9

#: Shared-abscissa threshold separating the two second-coordinate rules.
THRESHOLDS: dict[Measure, float] = {Measure.COG: 2.5, Measure.TFAM: 15.0}

#: Best achievable first coordinate per quality measure.
IDEALS: dict[Measure, float] = {Measure.GPA: 4.0, Measure.COG: 4.5, Measure.TFAM: 33.0}

#: Winner value used when neither side wins.
TIE = "tie"


class DecidingRule(Enum):
    """Which rule of the comparison criterion settled a verdict."""

    FIRST_COORD = "first_coord"
    SECOND_COORD_HIGH_REGION = "second_coord_high_region"
    SECOND_COORD_LOW_REGION = "second_coord_low_region"
    EXACT_TIE = "exact_tie"


class QualityLabel(Enum):
    """Quality of a measure relative to half its ideal value."""

    LESS_THAN_SATISFACTORY = "less than satisfactory"
    SATISFACTORY = "satisfactory"
    MORE_THAN_SATISFACTORY = "more than satisfactory"


@dataclass(frozen=True)
class ComparisonVerdict:
    """Outcome of comparing two groups under one method."""

    winner: str
    rule: DecidingRule
    method: Measure


def compare_points(
    p: AssessmentPoint,
    q: AssessmentPoint,
    threshold: float,
    eps: float = DEFAULT_EPS,
    labels: tuple[str, str] = ("p", "q"),
) -> ComparisonVerdict:
    """Apply the three-rule criterion to two same-method points.

    ``labels`` names the two sides; the verdict's winner is the matching
    label, or ``"tie"`` when both coordinates agree within ``eps``.
    """
    if p.method is not q.method:
        raise UsageError(
            f"cannot compare a {p.method.value} point with a {q.method.value} point"
        )
    if not eps > 0:
        raise UsageError(f"eps must be positive, got {eps}")
    first, second = labels
    if abs(p.x - q.x) > eps:
        return ComparisonVerdict(
            first if p.x > q.x else second, DecidingRule.FIRST_COORD, p.method
        )
    if abs(p.y - q.y) > eps:
        shared_x = (p.x + q.x) / 2
        if shared_x >= threshold:
            winner = first if p.y > q.y else second
            rule = DecidingRule.SECOND_COORD_HIGH_REGION
        else:
            winner = first if p.y < q.y else second
            rule = DecidingRule.SECOND_COORD_LOW_REGION
        return ComparisonVerdict(winner, rule, p.method)
    return ComparisonVerdict(TIE, DecidingRule.EXACT_TIE, p.method)


def compare_values(
    a: float,
    b: float,
    method: Measure,
    eps: float = DEFAULT_EPS,
    labels: tuple[str, str] = ("a", "b"),
) -> ComparisonVerdict:
    """Compare two scalar measures (mean or GPA): the greater value wins."""
    if not eps > 0:
        raise UsageError(f"eps must be positive, got {eps}")
    first, second = labels
    if abs(a - b) > eps:
        return ComparisonVerdict(
            first if a > b else second, DecidingRule.FIRST_COORD, method
        )
    return ComparisonVerdict(TIE, DecidingRule.EXACT_TIE, method)


def quality_label(
    value: float, ideal: float, eps: float = DEFAULT_EPS
) -> QualityLabel:
    """Label ``value`` against half of ``ideal``; ties map to SATISFACTORY."""
    if not ideal > 0:
        raise UsageError(f"ideal must be positive, got {ideal}")
    half = ideal / 2
    if value < half - eps:
        return QualityLabel.LESS_THAN_SATISFACTORY
    if value > half + eps:
        return QualityLabel.MORE_THAN_SATISFACTORY
    return QualityLabel.SATISFACTORY


def rank_groups(
    points: Sequence[tuple[str, AssessmentPoint]],
    threshold: float,
    eps: float = DEFAULT_EPS,
) -> list[str]:
    """Order group ids best-first by the pairwise criterion.

    Sorting is stable, so groups whose points tie exactly keep their
    input order.  When several pairs tie on the first coordinate in
    different threshold regions the criterion is not transitive and the
    result depends on the sort order of the input; such inputs are
    degenerate for this ranking.
    """
    if len(points) < 2:
        raise UsageError(f"ranking needs at least two groups, got {len(points)}")
    methods = {point.method for _, point in points}
    if len(methods) != 1:
        names = sorted(m.value for m in methods)
        raise UsageError(f"all points must share one method, got {names}")

    def beats(gp: tuple[str, AssessmentPoint], gq: tuple[str, AssessmentPoint]) -> int:
        verdict = compare_points(gp[1], gq[1], threshold, eps, labels=("p", "q"))
        if verdict.winner == "p":
            return -1
        if verdict.winner == "q":
            return 1
        return 0

    ordered = sorted(points, key=functools.cmp_to_key(beats))
    return [group_id for group_id, _ in ordered]
