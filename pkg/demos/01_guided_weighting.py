"""Median-anchored weighting from four questions.

A decision-maker ranks four criterion groups by answering one median
pick, three relative comparisons, and one extreme comparison. The
answers become a small constrained least-squares problem whose solution
is the group weight vector.
"""
from somit import compose_hierarchy, make_session, solve_subjective
from somit.elicitation import build_kkt

# The group-level session: Environmental is felt to be of median
# importance; everything else is rated against it.
groups = make_session(
    ["Financial", "Technical", "Environmental", "Social"],
    "Environmental",
    {"Financial": 4.0, "Technical": 3.0, "Social": 0.5},
    extreme_value=2.0,  # Financial (highest) vs Social (lowest)
)

A, rhs = build_kkt(groups)
print("stationarity-plus-constraint system:")
for row, r in zip(A, rhs):
    print("  [" + " ".join(f"{v:6.1f}" for v in row) + f" | {r:4.1f}]")

solution = solve_subjective(groups)
print("\ngroup weights:")
for label, w in solution.weights.as_dict().items():
    print(f"  {label:<14}{w:.4f}")
print(f"residual objective z = {solution.z:.6f}")
print(f"multiplier alpha     = {solution.alpha:.6f}")

# Within the Financial group the same machinery runs on decimals.
financial = make_session(["C1", "C2", "C3"], "C2",
                         {"C1": 1.5, "C3": 0.8}, extreme_value=1.3)
shares = solve_subjective(financial).weights
print("\nfinancial shares:", {k: round(v, 4) for k, v in shares.as_dict().items()})

# Other groups split evenly (all-ones sessions), then everything composes.
from somit import HierarchySpec

hierarchy = HierarchySpec(groups, {
    "Financial": financial,
    "Technical": make_session(["C4", "C5", "C6"], "C4",
                              {"C5": 1.0, "C6": 1.0}, 1.0),
    "Environmental": make_session(["C7", "C8"], "C7", {"C8": 1.0}),
    "Social": make_session(["C9", "C10"], "C9", {"C10": 1.0}),
})
subjective = compose_hierarchy(hierarchy)
print("\nten-criterion subjective weights:")
for label, w in subjective.as_dict().items():
    print(f"  {label:<5}{w:.4f}")
