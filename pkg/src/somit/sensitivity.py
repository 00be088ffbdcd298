"""Robustness harness: declarative matrix perturbations, the average
absolute fractional deviation of weights, and method-vs-method reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, Union

import numpy as np

from .model import (
    DecisionProblem,
    NumericError,
    ValidationError,
    WeightVector,
)


@dataclass(frozen=True)
class CellReplace:
    """Overwrite a single cell, e.g. to inject an outlier."""

    alternative: str
    criterion: str
    value: float


@dataclass(frozen=True)
class AffineColumn:
    """Rescale a column to f -> a*f + b. A negative ``a`` reverses the
    optimization sense, so the direction flag flips with it."""

    criterion: str
    a: float
    b: float = 0.0


@dataclass(frozen=True)
class ReciprocalColumn:
    """Replace a column by its elementwise reciprocal; optionally flip
    the direction (minimizing f equals maximizing 1/f)."""

    criterion: str
    flip_direction: bool = True


@dataclass(frozen=True)
class ComplementColumn:
    """Replace a column by c - f; always flips the direction."""

    criterion: str
    c: float


Edit = Union[CellReplace, AffineColumn, ReciprocalColumn, ComplementColumn]


@dataclass(frozen=True)
class PerturbationScenario:
    """Ordered edits applied to a problem for a sensitivity run."""

    edits: tuple[Edit, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "edits", tuple(self.edits))


def apply_scenario(problem: DecisionProblem,
                   scenario: PerturbationScenario) -> DecisionProblem:
    """Apply the edits in order, updating direction flags where an edit
    flips the optimization sense."""
    matrix = np.array(problem.matrix)
    criteria = list(problem.criteria)
    codes = list(problem.codes)

    def col(code: str) -> int:
        if code not in codes:
            raise ValidationError(f"unknown criterion {code!r}")
        return codes.index(code)

    for edit in scenario.edits:
        if isinstance(edit, CellReplace):
            if edit.alternative not in problem.alternatives:
                raise ValidationError(f"unknown alternative {edit.alternative!r}")
            i = problem.alternatives.index(edit.alternative)
            matrix[i, col(edit.criterion)] = edit.value
        elif isinstance(edit, AffineColumn):
            if edit.a == 0:
                raise ValidationError(
                    f"affine edit on {edit.criterion!r} needs a != 0")
            j = col(edit.criterion)
            matrix[:, j] = edit.a * matrix[:, j] + edit.b
            if edit.a < 0:
                criteria[j] = _flip(criteria[j])
        elif isinstance(edit, ReciprocalColumn):
            j = col(edit.criterion)
            if (matrix[:, j] == 0).any():
                raise ValidationError(
                    f"reciprocal of a zero entry in column {edit.criterion!r}")
            matrix[:, j] = 1.0 / matrix[:, j]
            if edit.flip_direction:
                criteria[j] = _flip(criteria[j])
        elif isinstance(edit, ComplementColumn):
            j = col(edit.criterion)
            matrix[:, j] = edit.c - matrix[:, j]
            criteria[j] = _flip(criteria[j])
        else:
            raise ValidationError(f"unknown edit {edit!r}")
    return DecisionProblem(criteria, problem.alternatives, matrix)


def _flip(spec):
    return replace(spec, direction=spec.direction.flipped())


def aafd_w(original: WeightVector, modified: WeightVector) -> float:
    """Average absolute fractional deviation between two weight vectors.

    Each term is |WO_j - WM_j| over the magnitude of their mean; a pair
    of exact zeros contributes zero. Returned as a fraction (0.019 means
    1.9%).
    """
    if original.labels != modified.labels:
        raise ValidationError(
            f"label mismatch: {original.labels} vs {modified.labels}")
    wo = original.array
    wm = modified.array
    terms = np.zeros(wo.size)
    for j in range(wo.size):
        if wo[j] == 0 and wm[j] == 0:
            continue
        mean = (wo[j] + wm[j]) / 2
        if mean == 0:
            raise NumericError(
                f"zero mean for {original.labels[j]!r}: deviation undefined")
        terms[j] = abs(wo[j] - wm[j]) / abs(mean)
    return float(terms.mean())


WeightingMethod = Callable[[DecisionProblem], WeightVector]


def robustness_report(problem: DecisionProblem,
                      scenario: PerturbationScenario,
                      methods: Mapping[str, WeightingMethod]) -> dict:
    """Run each weighting method on the original and perturbed problem
    and summarize the weight movement per method."""
    perturbed = apply_scenario(problem, scenario)
    report: dict = {"criteria": list(problem.codes), "methods": {}}
    for name, method in methods.items():
        w_orig = method(problem)
        w_mod = method(perturbed)
        delta = np.abs(w_orig.array - w_mod.array)
        report["methods"][name] = {
            "original": list(w_orig.values),
            "perturbed": list(w_mod.values),
            "aafd_w": aafd_w(w_orig, w_mod),
            "max_abs_change": float(delta.max()),
        }
    return report
