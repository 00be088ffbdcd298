"""How much do weights move when the matrix is re-scaled or corrupted?

Three declarative edits re-express criteria (a 1-5 scale stretched to
1-9, a cost turned into its reciprocal benefit, a benefit complemented
into a cost); a fourth injects a data-entry outlier. Median-based
dispersion weighting barely moves; CRITIC moves more.
"""
from common import india_problem

from somit import (
    AffineColumn,
    CellReplace,
    ComplementColumn,
    PerturbationScenario,
    ReciprocalColumn,
    critic_weights,
    objective_weights,
    robustness_report,
)

problem = india_problem()
methods = {"somit-ii": objective_weights, "critic": critic_weights}

rescale = PerturbationScenario((
    AffineColumn("C6", a=2, b=-1),        # 1-5 scale becomes 1-9
    ReciprocalColumn("C7"),               # minimize emissions -> maximize yield
    ComplementColumn("C9", c=1),          # benefit becomes distance-to-goal
))
report = robustness_report(problem, rescale, methods)
print("re-expression scenario:")
for name, block in report["methods"].items():
    print(f"  {name:<10} aafd_w {block['aafd_w'] * 100:5.2f}%   "
          f"max|dw| {block['max_abs_change']:.4f}")

outlier = PerturbationScenario((CellReplace("Solar", "C7", 480.0),))
report = robustness_report(problem, outlier, methods)
print("\noutlier scenario (one emissions cell off by 10x):")
for name, block in report["methods"].items():
    print(f"  {name:<10} aafd_w {block['aafd_w'] * 100:5.2f}%   "
          f"max|dw| {block['max_abs_change']:.4f}")
