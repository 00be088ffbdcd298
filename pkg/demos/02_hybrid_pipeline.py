"""Full hybrid pipeline on the India renewable-energy matrix.

Subjective weights from the guided session, objective weights from
median-based dispersion of the matrix itself, multiplicative synthesis,
then a TOPSIS ranking of the four energy sources.
"""
import numpy as np
from common import india_hierarchy, india_problem

from somit import combine, compose_hierarchy, objective_weights, topsis
from somit.weighting import normalization_table

problem = india_problem()
hierarchy = india_hierarchy()

subjective = compose_hierarchy(hierarchy, problem)
objective = objective_weights(problem)
final = combine(subjective, objective)

print(f"{'criterion':<10}{'subjective':>12}{'objective':>12}{'final':>12}")
for j, code in enumerate(problem.codes):
    print(f"{code:<10}{subjective.values[j]:>12.4f}"
          f"{objective.values[j]:>12.4f}{final.values[j]:>12.4f}")

# dispersion audit block: normalized matrix, medians, spread per column
table = normalization_table(problem)
print("\ncolumn medians:", np.round(table["medians"], 4))
print("column spread (AADM):", np.round(table["aadm"], 4))

result = topsis(problem, final, round4=True)
print("\nranking (closeness to the ideal):")
for k, alt in enumerate(result.order, 1):
    print(f"  {k}. {alt:<10}{result.score_of(alt):.4f}")
