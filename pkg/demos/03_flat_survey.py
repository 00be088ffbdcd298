"""Flat eight-criterion evaluation, no grouping.

Eight criteria, eight answers: one median pick anchors seven relative
comparisons, and one extreme comparison closes the session. A full
pairwise matrix would have needed 28.
"""
from common import saudi_problem, saudi_session

from somit import combine, objective_weights, solve_subjective, topsis

problem = saudi_problem()
session = saudi_session()
print(f"{len(session.items)} criteria answered with "
      f"{session.question_count()} comparisons "
      f"(a full matrix needs {8 * 7 // 2})")

subjective = solve_subjective(session).weights
objective = objective_weights(problem)
final = combine(subjective, objective)

print(f"\n{'criterion':<10}{'subjective':>12}{'objective':>12}{'final':>12}")
for j, code in enumerate(problem.codes):
    print(f"{code:<10}{subjective[code]:>12.4f}"
          f"{objective[code]:>12.4f}{final[code]:>12.4f}")

result = topsis(problem, final, round4=True)
print("\nranking:")
for k, alt in enumerate(result.order, 1):
    print(f"  {k}. {alt:<14}{result.score_of(alt):.4f}")
