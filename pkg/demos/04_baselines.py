"""The same judgments expressed two ways: a median-anchored session
versus a full pairwise matrix solved by its principal eigenvector, plus
CRITIC as a second objective method.
"""
import numpy as np
from common import india_hierarchy, india_problem

from somit import (
    PairwiseMatrix,
    ahp_compose,
    ahp_weights,
    compose_hierarchy,
    consistency_ratio,
    critic_weights,
    objective_weights,
)
from somit.numerics import pearson

problem = india_problem()

# Full 4x4 matrix over the criterion groups. The column against the
# median-importance group and the extreme comparison carry over from the
# guided session; the rest had to be asked on top.
groups = PairwiseMatrix(
    ("Financial", "Technical", "Environmental", "Social"),
    [
        [1, 2, 4, 2],
        [1 / 2, 1, 3, 5],
        [1 / 4, 1 / 3, 1, 2],
        [1 / 2, 1 / 5, 1 / 2, 1],
    ])
eigen = ahp_weights(groups)
print("eigenvector group weights:", {k: round(v, 4)
                                     for k, v in eigen.as_dict().items()})
print(f"consistency ratio: {consistency_ratio(groups):.4f}")

ten = ahp_compose(groups, {
    "Financial": PairwiseMatrix(("C1", "C2", "C3"),
                                [[1, 1.5, 1.3],
                                 [1 / 1.5, 1, 1 / 0.8],
                                 [1 / 1.3, 0.8, 1]]),
    "Technical": PairwiseMatrix(("C4", "C5", "C6"), np.ones((3, 3))),
    "Environmental": PairwiseMatrix(("C7", "C8"), np.ones((2, 2))),
    "Social": PairwiseMatrix(("C9", "C10"), np.ones((2, 2))),
})
anchored = compose_hierarchy(india_hierarchy(), problem)

print(f"\n{'criterion':<10}{'eigenvector':>12}{'anchored':>12}")
for code in problem.codes:
    print(f"{code:<10}{ten[code]:>12.4f}{anchored[code]:>12.4f}")
print(f"correlation between the two: "
      f"{pearson(ten.values, anchored.values):.3f}")

print("\nobjective methods on the same matrix:")
dispersion = objective_weights(problem)
critic = critic_weights(problem)
for code in problem.codes:
    print(f"{code:<10}{dispersion[code]:>12.4f}{critic[code]:>12.4f}")
