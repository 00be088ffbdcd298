"""Comparison weighting methods: AHP from a full reciprocal pairwise
matrix, and CRITIC from criterion dispersion and inter-criterion
correlation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import numerics
from .model import (
    DecisionProblem,
    Direction,
    NumericError,
    Provenance,
    ValidationError,
    WeightVector,
    validate_problem,
)

# Saaty's random consistency index by matrix size.
RANDOM_INDEX = {3: 0.58, 4: 0.90, 5: 1.12, 6: 1.24, 7: 1.32,
                8: 1.41, 9: 1.45, 10: 1.49}

RECIPROCITY_TOL = 1e-9


@dataclass(frozen=True)
class PairwiseMatrix:
    """Full positive reciprocal comparison matrix on the 1/9..9 scale."""

    labels: tuple[str, ...]
    values: np.ndarray

    def __init__(self, labels: Sequence[str], values) -> None:
        labels = tuple(labels)
        a = np.array(values, dtype=float)
        n = len(labels)
        if a.shape != (n, n):
            raise ValidationError(f"matrix shape {a.shape} for {n} labels")
        if not np.isfinite(a).all() or (a <= 0).any():
            raise ValidationError("entries must be positive and finite")
        if (a < 1 / 9 - RECIPROCITY_TOL).any() or (a > 9 + RECIPROCITY_TOL).any():
            raise ValidationError("entries must lie in [1/9, 9]")
        if not np.allclose(np.diag(a), 1.0, atol=RECIPROCITY_TOL, rtol=0):
            raise ValidationError("diagonal must be all ones")
        gap = np.abs(a.T - 1.0 / a)
        if gap.max() > RECIPROCITY_TOL:
            i, j = np.unravel_index(int(gap.argmax()), gap.shape)
            raise ValidationError(
                f"reciprocity violated at ({labels[j]}, {labels[i]}): "
                f"{a[j, i]} vs 1/{a[i, j]}")
        a.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", a)

    @property
    def n(self) -> int:
        return len(self.labels)


def ahp_weights(matrix: PairwiseMatrix) -> WeightVector:
    """Priorities from the principal eigenvector, normalized to sum 1."""
    vec, _ = numerics.principal_eigenvector(matrix.values)
    return WeightVector(matrix.labels, vec, Provenance.AHP)


def consistency_ratio(matrix: PairwiseMatrix) -> float:
    """Saaty consistency ratio CR = CI / RI(n); 0 for a consistent matrix."""
    n = matrix.n
    if n not in RANDOM_INDEX:
        raise ValidationError(f"consistency ratio defined for n in 3..10, got {n}")
    _, lam = numerics.principal_eigenvector(matrix.values)
    ci = (lam - n) / (n - 1)
    return ci / RANDOM_INDEX[n]


def ahp_compose(groups: PairwiseMatrix,
                per_group: Mapping[str, "PairwiseMatrix | str"],
                order: Sequence[str] | None = None) -> WeightVector:
    """Hierarchical AHP: group priorities times within-group shares.

    ``per_group`` maps each group label to its inner pairwise matrix, or
    to the lone member's code for singleton groups. Groups whose inner
    matrix is all ones split evenly, same as the hierarchy composition
    used for median-anchored sessions.
    """
    group_w = ahp_weights(groups)
    weights: dict[str, float] = {}
    ordered: list[str] = []
    for group in group_w.labels:
        inner = per_group.get(group)
        if inner is None:
            raise ValidationError(f"no inner matrix for group {group!r}")
        if isinstance(inner, str):
            members = {inner: 1.0}
        else:
            members = ahp_weights(inner).as_dict()
        for code, share in members.items():
            if code in weights:
                raise ValidationError(f"criterion {code!r} appears in two groups")
            weights[code] = group_w[group] * share
            ordered.append(code)
    if order is not None:
        if set(order) != set(ordered):
            raise ValidationError("order does not cover the composed criteria")
        ordered = list(order)
    total = sum(weights.values())
    return WeightVector(ordered, [weights[c] / total for c in ordered],
                        Provenance.AHP)


def critic_weights(problem: DecisionProblem) -> WeightVector:
    """Dispersion-times-conflict weighting.

    Columns are min-max normalized toward their preferred direction,
    scored by population standard deviation times the summed complement
    of pairwise Pearson correlations, then normalized.
    """
    validate_problem(problem).raise_if_invalid("problem")
    f = problem.matrix
    lo, hi = f.min(axis=0), f.max(axis=0)
    span = hi - lo
    flat = np.flatnonzero(span == 0)
    if flat.size:
        raise NumericError(
            f"constant column(s) {[problem.codes[j] for j in flat]}: "
            "dispersion weighting undefined")
    benefit = np.array([d is Direction.BENEFIT for d in problem.directions])
    x = np.where(benefit, (f - lo) / span, (hi - f) / span)
    sigma = x.std(axis=0)
    rho = np.corrcoef(x, rowvar=False)
    info = sigma * (1.0 - rho).sum(axis=1)
    return WeightVector(problem.codes, info / info.sum(), Provenance.CRITIC)
