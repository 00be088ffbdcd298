"""Domain types shared by every stage: decision problems, comparison
sessions, weight vectors, and the 1-9 comparison scale.

All types are frozen dataclasses; every operation here is pure.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional, Sequence

import numpy as np

SCALE_MIN = Fraction(1, 9)
SCALE_MAX = Fraction(9)

_DECIMAL_RE = re.compile(r"^\d+(\.\d+)?$")
_FRACTION_RE = re.compile(r"^(\d+)\s*/\s*(\d+)$")


class SomitError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SomitError):
    """Input fails a structural or domain constraint."""


class NumericError(SomitError):
    """A numerical procedure failed (singular system, bound violation, ...)."""


class Direction(str, Enum):
    BENEFIT = "benefit"
    COST = "cost"

    def flipped(self) -> "Direction":
        return Direction.COST if self is Direction.BENEFIT else Direction.BENEFIT


class Provenance(str, Enum):
    SUBJECTIVE = "subjective"
    OBJECTIVE = "objective"
    FINAL = "final"
    AHP = "ahp"
    CRITIC = "critic"


def parse_scale(text: str) -> float:
    """Parse a comparison-scale token into a float in [1/9, 9].

    Accepts a decimal literal ("3", "3.5", "0.21") or a fraction of
    positive integers ("1/3"). Fractions are evaluated exactly before
    conversion so reciprocals like 1/9 land on the closest float.
    """
    token = text.strip()
    m = _FRACTION_RE.match(token)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p == 0 or q == 0:
            raise ValidationError(f"fraction parts must be positive: {text!r}")
        value = Fraction(p, q)
    elif _DECIMAL_RE.match(token):
        value = Fraction(token)
    else:
        raise ValidationError(f"malformed scale token: {text!r}")
    if not SCALE_MIN <= value <= SCALE_MAX:
        raise ValidationError(
            f"scale value {token} outside [1/9, 9]"
        )
    return float(value)


def format_scale(value: float) -> str:
    """Shortest decimal token that parses back to the same float."""
    return repr(float(value))


def _check_scale_value(value: float, what: str) -> None:
    if not math.isfinite(value) or not (float(SCALE_MIN) <= value <= float(SCALE_MAX)):
        raise ValidationError(f"{what} {value} outside [1/9, 9]")


@dataclass(frozen=True)
class CriterionSpec:
    """One evaluation criterion: code, display name, unit, optimization
    direction, and optional group label."""

    code: str
    name: str = ""
    unit: str = ""
    direction: Direction = Direction.BENEFIT
    group: Optional[str] = None

    def __post_init__(self):
        if not self.code:
            raise ValidationError("criterion code must be non-empty")
        if not isinstance(self.direction, Direction):
            object.__setattr__(self, "direction", Direction(self.direction))
        if not self.name:
            object.__setattr__(self, "name", self.code)


@dataclass(frozen=True)
class DecisionProblem:
    """Alternatives x criteria performance matrix with per-criterion metadata.

    The constructor enforces only structural consistency (shapes agree,
    entries numeric); domain rules such as m >= 2 or finiteness are
    reported by :func:`validate_problem` so callers can inspect them.
    """

    criteria: tuple[CriterionSpec, ...]
    alternatives: tuple[str, ...]
    matrix: np.ndarray

    def __init__(self, criteria: Sequence[CriterionSpec], alternatives: Sequence[str],
                 matrix) -> None:
        object.__setattr__(self, "criteria", tuple(criteria))
        object.__setattr__(self, "alternatives", tuple(str(a) for a in alternatives))
        arr = np.array(matrix, dtype=float)
        if arr.ndim != 2:
            raise ValidationError("matrix must be two-dimensional")
        if arr.shape != (len(self.alternatives), len(self.criteria)):
            raise ValidationError(
                f"matrix shape {arr.shape} does not match "
                f"{len(self.alternatives)} alternatives x {len(self.criteria)} criteria"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "matrix", arr)

    @property
    def m(self) -> int:
        return len(self.alternatives)

    @property
    def n(self) -> int:
        return len(self.criteria)

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(c.code for c in self.criteria)

    @property
    def directions(self) -> tuple[Direction, ...]:
        return tuple(c.direction for c in self.criteria)

    def column(self, code: str) -> np.ndarray:
        return self.matrix[:, self.codes.index(code)]

    def replace_matrix(self, matrix, criteria: Optional[Sequence[CriterionSpec]] = None
                       ) -> "DecisionProblem":
        return DecisionProblem(criteria if criteria is not None else self.criteria,
                               self.alternatives, matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DecisionProblem):
            return NotImplemented
        return (self.criteria == other.criteria
                and self.alternatives == other.alternatives
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((self.criteria, self.alternatives, self.matrix.tobytes()))


@dataclass(frozen=True)
class ExtremeComparison:
    """Direct comparison between the highest- and lowest-rated items."""

    high: str
    low: str
    value: float

    def __post_init__(self):
        _check_scale_value(self.value, "extreme comparison")


@dataclass(frozen=True)
class ComparisonSession:
    """Median-anchored elicitation at one hierarchy level.

    ``comparisons`` maps every non-median item to its importance relative
    to the median item. ``extreme`` holds the one direct comparison
    between the items with the highest and lowest relative values; it is
    required for 3+ items and meaningless for 2.
    """

    items: tuple[str, ...]
    median: str
    comparisons: Mapping[str, float]
    extreme: Optional[ExtremeComparison] = None

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        object.__setattr__(self, "comparisons", dict(self.comparisons))

    @property
    def median_index(self) -> int:
        return self.items.index(self.median)

    def question_count(self) -> int:
        """Number of elicited comparisons (n-1 relative + the extreme)."""
        return len(self.comparisons) + (1 if self.extreme is not None else 0)


def extreme_pair(items: Sequence[str], median: str,
                 comparisons: Mapping[str, float]) -> tuple[str, str]:
    """Items to compare directly in the extreme step: (highest, lowest).

    Ties resolve to the first item in session order; when every
    comparison is equal the pair is the first and last non-median items
    so that the two ends stay distinct.
    """
    others = [it for it in items if it != median]
    values = [comparisons[it] for it in others]
    hi, lo = max(values), min(values)
    if hi == lo:
        return others[0], others[-1]
    high = others[values.index(hi)]
    low = others[values.index(lo)]
    return high, low


@dataclass(frozen=True)
class HierarchySpec:
    """Two-level elicitation: one session over group labels plus one
    entry per group mapping to either a ComparisonSession over its
    criterion codes (2+ members) or, for a singleton group, the plain
    code of its lone member (the group weight passes through unchanged).
    """

    group_session: ComparisonSession
    per_group: Mapping[str, "ComparisonSession | str"] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "per_group", dict(self.per_group))


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights summing to one, labeled and provenance-tagged."""

    labels: tuple[str, ...]
    values: tuple[float, ...]
    provenance: Provenance

    def __init__(self, labels: Sequence[str], values: Sequence[float],
                 provenance: Provenance) -> None:
        labels = tuple(labels)
        vals = tuple(float(v) for v in values)
        if len(labels) != len(vals):
            raise ValidationError("labels and weights differ in length")
        if any(v < 0 for v in vals):
            raise ValidationError(f"negative weight in {vals}")
        total = sum(vals)
        if abs(total - 1.0) > 1e-9:
            raise ValidationError(f"weights sum to {total}, expected 1")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "provenance", Provenance(provenance))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.values)

    def __getitem__(self, label: str) -> float:
        return self.values[self.labels.index(label)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.values))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a report-style validation: hard violations plus
    advisory warnings."""

    errors: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def raise_if_invalid(self, what: str = "input") -> None:
        if self.errors:
            raise ValidationError(f"invalid {what}: " + "; ".join(self.errors))


def validate_problem(problem: DecisionProblem) -> ValidationReport:
    """Check a problem's domain rules.

    Violations: fewer than two alternatives, duplicate criterion or
    alternative labels, non-finite cells. Constant columns are only a
    warning; whether they are fatal depends on the downstream formula.
    """
    errors: list[str] = []
    warnings: list[str] = []
    if problem.m < 2:
        errors.append("m >= 2 required (at least two alternatives)")
    if problem.n < 1:
        errors.append("n >= 1 required (at least one criterion)")
    codes = problem.codes
    for code in sorted({c for c in codes if codes.count(c) > 1}):
        errors.append(f"duplicate criterion code {code!r}")
    alts = problem.alternatives
    for alt in sorted({a for a in alts if alts.count(a) > 1}):
        errors.append(f"duplicate alternative label {alt!r}")
    bad = np.argwhere(~np.isfinite(problem.matrix))
    for i, j in bad:
        errors.append(
            f"non-finite value at alternative {alts[i]!r}, criterion {codes[j]!r}")
    if not errors:
        spans = problem.matrix.max(axis=0) - problem.matrix.min(axis=0)
        for j in np.flatnonzero(spans == 0):
            warnings.append(f"zero dispersion column {codes[j]!r}")
    return ValidationReport(tuple(errors), tuple(warnings))


def validate_session(session: ComparisonSession) -> ValidationReport:
    """Check a comparison session's structural rules.

    The half-half guideline (about half the items above the median, half
    below) is soft: an imbalance of more than one item only warns.
    """
    errors: list[str] = []
    warnings: list[str] = []
    items = session.items
    if len(items) < 2:
        errors.append("session needs at least two items")
        return ValidationReport(tuple(errors))
    if len(set(items)) != len(items):
        errors.append("duplicate item labels")
    if session.median not in items:
        errors.append(f"median {session.median!r} not among items")
        return ValidationReport(tuple(errors))

    expected = {it for it in items if it != session.median}
    got = set(session.comparisons)
    for it in sorted(expected - got):
        errors.append(f"missing comparison for {it!r}")
    for it in sorted(got - expected):
        errors.append(f"unexpected comparison for {it!r}")
    for it, v in session.comparisons.items():
        if not math.isfinite(v) or not (float(SCALE_MIN) <= v <= float(SCALE_MAX)):
            errors.append(f"comparison for {it!r} outside [1/9, 9]: {v}")
    if errors:
        return ValidationReport(tuple(errors), tuple(warnings))

    if len(items) == 2:
        if session.extreme is not None:
            errors.append("two-item session must not carry an extreme comparison")
    else:
        if session.extreme is None:
            errors.append("extreme comparison required for three or more items")
        else:
            high, low = extreme_pair(items, session.median, session.comparisons)
            if (session.extreme.high, session.extreme.low) != (high, low):
                errors.append(
                    f"extreme pair ({session.extreme.high!r}, {session.extreme.low!r}) "
                    f"does not match the rated extremes ({high!r}, {low!r})")

    above = sum(1 for v in session.comparisons.values() if v > 1)
    below = sum(1 for v in session.comparisons.values() if v < 1)
    if abs(above - below) > 1:
        warnings.append(
            f"half-half guideline: {above} comparisons above 1 vs {below} below")
    return ValidationReport(tuple(errors), tuple(warnings))


def make_session(items: Sequence[str], median: str,
                 comparisons: Mapping[str, float],
                 extreme_value: Optional[float] = None) -> ComparisonSession:
    """Build a session, deriving the extreme pair from the comparisons.

    ``extreme_value`` is required for 3+ items and forbidden for 2.
    """
    items = tuple(items)
    if len(items) >= 3:
        if extreme_value is None:
            raise ValidationError("extreme comparison value required for 3+ items")
        high, low = extreme_pair(items, median, comparisons)
        extreme = ExtremeComparison(high, low, float(extreme_value))
    else:
        if extreme_value is not None:
            raise ValidationError("two-item session takes no extreme comparison")
        extreme = None
    session = ComparisonSession(items, median, comparisons, extreme)
    validate_session(session).raise_if_invalid("session")
    return session
