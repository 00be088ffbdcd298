"""TOPSIS ranking behind a pluggable ranker interface.

Directions enter only when picking the ideal solutions; normalization
and weighting are direction-blind. Scores use full-precision weights by
default; ``round4=True`` rounds the weights to four decimals first to
mirror published tables computed that way.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .model import (
    DecisionProblem,
    Direction,
    NumericError,
    ValidationError,
    WeightVector,
    validate_problem,
)

Ranker = Callable[[DecisionProblem, WeightVector], "RankingResult"]


@dataclass(frozen=True)
class RankingResult:
    """Distances to the ideal solutions and the induced ordering."""

    alternatives: tuple[str, ...]
    s_plus: np.ndarray
    s_minus: np.ndarray
    scores: np.ndarray          # P_i = s_minus / (s_minus + s_plus)
    order: tuple[str, ...]      # best first; ties keep input order
    pis: np.ndarray
    nis: np.ndarray

    def score_of(self, alternative: str) -> float:
        return float(self.scores[self.alternatives.index(alternative)])

    def as_dict(self) -> dict:
        return {
            "scores": {a: float(s) for a, s in zip(self.alternatives, self.scores)},
            "s_plus": {a: float(s) for a, s in zip(self.alternatives, self.s_plus)},
            "s_minus": {a: float(s) for a, s in zip(self.alternatives, self.s_minus)},
            "order": list(self.order),
            "pis": self.pis.tolist(),
            "nis": self.nis.tolist(),
        }


def vector_normalize(problem: DecisionProblem) -> np.ndarray:
    """Divide each column by its Euclidean norm."""
    if not np.isfinite(problem.matrix).all():
        raise ValidationError("matrix has non-finite entries")
    norms = np.sqrt((problem.matrix ** 2).sum(axis=0))
    zero = np.flatnonzero(norms == 0)
    if zero.size:
        raise NumericError(
            f"all-zero column(s) {[problem.codes[j] for j in zero]} "
            "cannot be vector-normalized")
    return problem.matrix / norms


def weighted_matrix(normalized: np.ndarray, weights: WeightVector,
                    codes: Sequence[str] | None = None) -> np.ndarray:
    """Scale each normalized column by its criterion weight."""
    if normalized.shape[1] != len(weights.labels):
        raise ValidationError(
            f"{normalized.shape[1]} columns vs {len(weights.labels)} weights")
    if codes is not None and tuple(codes) != weights.labels:
        raise ValidationError(
            f"weight labels {weights.labels} do not match criteria {tuple(codes)}")
    return normalized * weights.array


def ideal_solutions(weighted: np.ndarray, directions: Sequence[Direction]
                    ) -> tuple[np.ndarray, np.ndarray]:
    """Per-column best (PIS) and worst (NIS) over the alternatives."""
    benefit = np.array([d is Direction.BENEFIT for d in directions])
    hi = weighted.max(axis=0)
    lo = weighted.min(axis=0)
    return np.where(benefit, hi, lo), np.where(benefit, lo, hi)


def topsis(problem: DecisionProblem, weights: WeightVector,
           round4: bool = False) -> RankingResult:
    """Rank alternatives by relative closeness to the ideal solutions."""
    validate_problem(problem).raise_if_invalid("problem")
    if problem.codes != weights.labels:
        raise ValidationError(
            f"weight labels {weights.labels} do not match criteria {problem.codes}")
    f = vector_normalize(problem)
    w = np.round(weights.array, 4) if round4 else weights.array
    v = f * w
    pis, nis = ideal_solutions(v, problem.directions)
    s_plus = np.sqrt(((v - pis) ** 2).sum(axis=1))
    s_minus = np.sqrt(((v - nis) ** 2).sum(axis=1))
    denom = s_plus + s_minus
    if (denom == 0).any():
        raise NumericError("indistinguishable alternatives: S+ = S- = 0")
    scores = s_minus / denom
    order = np.argsort(-scores, kind="stable")
    for arr in (s_plus, s_minus, scores, pis, nis):
        arr.flags.writeable = False
    return RankingResult(
        alternatives=problem.alternatives,
        s_plus=s_plus,
        s_minus=s_minus,
        scores=scores,
        order=tuple(problem.alternatives[i] for i in order),
        pis=pis,
        nis=nis,
    )


RANKERS: dict[str, Ranker] = {"topsis": topsis}
