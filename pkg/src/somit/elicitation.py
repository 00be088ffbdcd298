"""Subjective weighting from median-anchored comparisons.

A session's comparisons define a quadratic penalty

    z = sum over assigned pairs (i, j) of (a_ij * w_j - w_i)^2

minimized over the simplex sum(w) = 1. The Lagrangian stationarity
conditions plus the constraint form a small linear system in
(w_1..w_n, alpha); solving it gives the subjective weights. Bounds
0 <= w <= 1 are verified afterwards rather than enforced by an
active-set method: a bound-violating solution signals inconsistent
comparisons the decision-maker should revisit.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import numerics
from .model import (
    ComparisonSession,
    DecisionProblem,
    HierarchySpec,
    NumericError,
    Provenance,
    ValidationError,
    WeightVector,
    validate_session,
)

BOUND_TOL = 1e-9


@dataclass(frozen=True)
class SubjectiveSolution:
    """Weights plus diagnostics from one session solve."""

    weights: WeightVector
    z: float
    alpha: float


def comparison_pairs(session: ComparisonSession) -> list[tuple[int, int, float]]:
    """Assigned pairs (i, j, a_ij) as item indices: every non-median item
    against the median, plus the extreme pair."""
    idx = {item: k for k, item in enumerate(session.items)}
    d = idx[session.median]
    pairs = [(idx[item], d, float(v)) for item, v in session.comparisons.items()]
    if session.extreme is not None:
        pairs.append((idx[session.extreme.high], idx[session.extreme.low],
                      float(session.extreme.value)))
    return pairs


def build_kkt(session: ComparisonSession) -> tuple[np.ndarray, np.ndarray]:
    """Assemble the (n+1)x(n+1) stationarity-plus-constraint system.

    Each pair (i, j) contributes the gradient of (a w_j - w_i)^2 to rows
    i and j; every stationarity row carries -alpha; the last row is the
    simplex constraint.
    """
    validate_session(session).raise_if_invalid("session")
    n = len(session.items)
    A = np.zeros((n + 1, n + 1))
    rhs = np.zeros(n + 1)
    for i, j, a in comparison_pairs(session):
        A[i, i] += 2.0
        A[i, j] -= 2.0 * a
        A[j, j] += 2.0 * a * a
        A[j, i] -= 2.0 * a
    A[:n, n] = -1.0
    A[n, :n] = 1.0
    rhs[n] = 1.0
    return A, rhs


def session_objective(session: ComparisonSession, weights) -> float:
    """Evaluate the deviation objective z at a given weight vector."""
    w = np.asarray(weights, dtype=float)
    return float(sum((a * w[j] - w[i]) ** 2 for i, j, a in comparison_pairs(session)))


def solve_subjective(session: ComparisonSession) -> SubjectiveSolution:
    """Solve the constrained least-squares problem for one session."""
    A, rhs = build_kkt(session)
    sol = numerics.solve_linear(A, rhs)
    n = len(session.items)
    w, alpha = sol[:n], float(sol[n])
    if (w < -BOUND_TOL).any() or (w > 1 + BOUND_TOL).any():
        offending = {session.items[k]: float(w[k])
                     for k in np.flatnonzero((w < -BOUND_TOL) | (w > 1 + BOUND_TOL))}
        raise NumericError(
            f"inconsistent comparisons: bound constraint active, weights {offending}")
    w = np.clip(w, 0.0, None)
    z = session_objective(session, w)
    return SubjectiveSolution(
        WeightVector(session.items, w, Provenance.SUBJECTIVE), z, alpha)


def compose_hierarchy(hierarchy: HierarchySpec,
                      problem: Optional[DecisionProblem] = None) -> WeightVector:
    """Distribute solved group weights over within-group shares.

    Each criterion's subjective weight is its group's weight times its
    share inside the group. Singleton groups need no inner session and
    pass the group weight through; a hierarchy with a single group gives
    that group weight 1 without solving. When a problem is given, the
    groups must exactly partition its criteria and the output follows
    the problem's criterion order; otherwise it follows group then
    session order.
    """
    if len(hierarchy.group_session.items) == 1:
        group_w = WeightVector(hierarchy.group_session.items, [1.0],
                               Provenance.SUBJECTIVE)
    else:
        group_w = solve_subjective(hierarchy.group_session).weights
    shares: dict[str, float] = {}
    membership: dict[str, list[str]] = {}
    for group in group_w.labels:
        inner = hierarchy.per_group.get(group)
        if inner is None:
            raise ValidationError(f"no session for group {group!r}")
        if isinstance(inner, str):
            membership[group] = [inner]
            shares[inner] = group_w[group]
            continue
        inner_w = solve_subjective(inner).weights
        membership[group] = list(inner_w.labels)
        for code in inner_w.labels:
            if code in shares:
                raise ValidationError(f"criterion {code!r} appears in two groups")
            shares[code] = group_w[group] * inner_w[code]

    if problem is not None:
        codes = problem.codes
        if set(shares) != set(codes):
            missing = sorted(set(codes) - set(shares))
            extra = sorted(set(shares) - set(codes))
            raise ValidationError(
                f"hierarchy does not partition the criteria "
                f"(missing {missing}, extra {extra})")
        by_group = {c.code: c.group for c in problem.criteria}
        for group, members in membership.items():
            for code in members:
                if by_group.get(code) != group:
                    raise ValidationError(
                        f"criterion {code!r} assigned to group {group!r} "
                        f"but the problem says {by_group.get(code)!r}")
        ordered = codes
    else:
        ordered = tuple(code for g in group_w.labels for code in membership[g])

    total = sum(shares.values())
    return WeightVector(ordered, [shares[c] / total for c in ordered],
                        Provenance.SUBJECTIVE)
