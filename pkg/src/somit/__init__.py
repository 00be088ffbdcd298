"""Hybrid criteria weighting for multi-criteria decision-making.

Subjective weights come from a short median-anchored comparison session
solved as a constrained least-squares problem; objective weights come
from median-based dispersion of the decision matrix; the two combine
multiplicatively. A TOPSIS ranker, AHP/CRITIC baselines, a sensitivity
harness, a CLI, and a session HTTP service sit on top.
"""

__version__ = "0.1.0"

from .model import (
    ComparisonSession,
    CriterionSpec,
    DecisionProblem,
    Direction,
    ExtremeComparison,
    HierarchySpec,
    NumericError,
    Provenance,
    SomitError,
    ValidationError,
    ValidationReport,
    WeightVector,
    make_session,
    parse_scale,
    validate_problem,
    validate_session,
)
from .elicitation import SubjectiveSolution, build_kkt, compose_hierarchy, solve_subjective
from .weighting import (
    NormalizedMatrix,
    aadm,
    combine,
    max_min_normalize,
    objective_weights,
)
from .ranking import RankingResult, ideal_solutions, topsis, vector_normalize, weighted_matrix
from .baselines import PairwiseMatrix, ahp_compose, ahp_weights, consistency_ratio, critic_weights
from .sensitivity import (
    AffineColumn,
    CellReplace,
    ComplementColumn,
    PerturbationScenario,
    ReciprocalColumn,
    aafd_w,
    apply_scenario,
    robustness_report,
)

__all__ = [
    "__version__",
    "AffineColumn",
    "CellReplace",
    "ComparisonSession",
    "ComplementColumn",
    "CriterionSpec",
    "DecisionProblem",
    "Direction",
    "ExtremeComparison",
    "HierarchySpec",
    "NormalizedMatrix",
    "NumericError",
    "PairwiseMatrix",
    "PerturbationScenario",
    "Provenance",
    "RankingResult",
    "ReciprocalColumn",
    "SomitError",
    "SubjectiveSolution",
    "ValidationError",
    "ValidationReport",
    "WeightVector",
    "aadm",
    "aafd_w",
    "ahp_compose",
    "ahp_weights",
    "apply_scenario",
    "build_kkt",
    "combine",
    "compose_hierarchy",
    "consistency_ratio",
    "critic_weights",
    "ideal_solutions",
    "make_session",
    "max_min_normalize",
    "objective_weights",
    "parse_scale",
    "robustness_report",
    "solve_subjective",
    "topsis",
    "validate_problem",
    "validate_session",
    "vector_normalize",
    "weighted_matrix",
]
