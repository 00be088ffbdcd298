"""Objective weights from criterion dispersion, and the multiplicative
synthesis of subjective and objective weights.

The objective side is direction-agnostic: each column is max-min
normalized as-is and scored by its average absolute deviation from the
column median (AADM). Dispersion carries the information; whether the
criterion is a benefit or a cost does not change it.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .model import (
    DecisionProblem,
    NumericError,
    Provenance,
    ValidationError,
    WeightVector,
    validate_problem,
)


class ErasedPreferenceWarning(UserWarning):
    """A criterion with subjective weight > 0 got final weight 0 because
    its objective weight vanished."""


@dataclass(frozen=True)
class NormalizedMatrix:
    """Max-min normalized matrix with per-column medians and AADM."""

    labels: tuple[str, ...]
    values: np.ndarray          # m x n, entries in [0, 1]
    medians: np.ndarray
    aadm: np.ndarray
    degenerate: tuple[bool, ...]  # constant columns, forced to all zeros


def max_min_normalize(problem: DecisionProblem) -> NormalizedMatrix:
    """Rescale every column to [0, 1] by its own min and max.

    Constant columns have no dispersion to preserve; they map to all
    zeros and are flagged degenerate rather than raising.
    """
    validate_problem(problem).raise_if_invalid("problem")
    f = problem.matrix
    lo = f.min(axis=0)
    span = f.max(axis=0) - lo
    degenerate = span == 0
    values = (f - lo) / np.where(degenerate, 1.0, span)
    values[:, degenerate] = 0.0
    medians = np.median(values, axis=0)
    r = np.abs(values - medians).mean(axis=0)
    values.flags.writeable = False
    return NormalizedMatrix(problem.codes, values, medians, r,
                            tuple(bool(d) for d in degenerate))


def aadm(nm: NormalizedMatrix) -> np.ndarray:
    """Average absolute deviation from the median, per column."""
    return np.abs(nm.values - nm.medians).mean(axis=0)


def objective_weights(problem: DecisionProblem) -> WeightVector:
    """Normalize the AADM row into objective weights."""
    nm = max_min_normalize(problem)
    total = nm.aadm.sum()
    if total == 0:
        raise NumericError("all columns degenerate: no dispersion to weight")
    return WeightVector(nm.labels, nm.aadm / total, Provenance.OBJECTIVE)


def combine(subjective: WeightVector, objective: WeightVector) -> WeightVector:
    """Multiplicative synthesis: w_j proportional to w_j^s * w_j^o."""
    if subjective.labels != objective.labels:
        raise ValidationError(
            f"label mismatch: {subjective.labels} vs {objective.labels}")
    ws = subjective.array
    wo = objective.array
    products = ws * wo
    total = products.sum()
    if total == 0:
        raise NumericError("every weight product is zero; nothing to combine")
    erased = np.flatnonzero((ws > 0) & (wo == 0))
    for j in erased:
        warnings.warn(
            f"criterion {subjective.labels[j]!r}: subjective weight "
            f"{ws[j]:.4f} erased by zero objective weight",
            ErasedPreferenceWarning, stacklevel=2)
    return WeightVector(subjective.labels, products / total, Provenance.FINAL)


def normalization_table(problem: DecisionProblem) -> dict:
    """Audit block mirroring the intermediate objective-weight arithmetic:
    normalized matrix, medians, per-cell absolute deviations, AADM."""
    nm = max_min_normalize(problem)
    dev = np.abs(nm.values - nm.medians)
    return {
        "criteria": list(nm.labels),
        "alternatives": list(problem.alternatives),
        "normalized": nm.values.tolist(),
        "medians": nm.medians.tolist(),
        "abs_deviation": dev.tolist(),
        "aadm": nm.aadm.tolist(),
        "degenerate": list(nm.degenerate),
    }
