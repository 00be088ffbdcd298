import numpy as np
import pytest

from somit import (
    CriterionSpec,
    DecisionProblem,
    NumericError,
    Provenance,
    ValidationError,
    WeightVector,
    aadm,
    combine,
    max_min_normalize,
    objective_weights,
)
from somit.weighting import ErasedPreferenceWarning, normalization_table

from conftest import (
    INDIA_AADM,
    INDIA_FINAL,
    INDIA_MEDIANS,
    INDIA_NORMALIZED,
    INDIA_OBJECTIVE,
    INDIA_SUBJECTIVE,
    SAUDI_FINAL,
    SAUDI_OBJECTIVE,
    SAUDI_SUBJECTIVE,
    assert_close,
)


def small_problem(matrix, directions=None):
    m, n = np.asarray(matrix).shape
    directions = directions or ["benefit"] * n
    criteria = [CriterionSpec(f"C{j+1}", direction=d)
                for j, d in enumerate(directions)]
    return DecisionProblem(criteria, [f"A{i+1}" for i in range(m)], matrix)


def random_problem(rng, m=None, n=None):
    m = m or int(rng.integers(2, 8))
    n = n or int(rng.integers(1, 9))
    return small_problem(rng.uniform(-10, 10, (m, n)))


class TestMaxMinNormalize:
    def test_india_block(self, india_problem):
        nm = max_min_normalize(india_problem)
        assert_close(nm.values, INDIA_NORMALIZED, 5e-4)
        assert_close(nm.medians, INDIA_MEDIANS, 5e-4)
        assert nm.degenerate == (False,) * 10

    def test_two_point_column(self):
        nm = max_min_normalize(small_problem([[0], [10]]))
        assert_close(nm.values[:, 0], (0, 1), 1e-15)

    def test_constant_column_flagged_zero(self):
        nm = max_min_normalize(small_problem([[5, 1], [5, 2], [5, 3]]))
        assert_close(nm.values[:, 0], (0, 0, 0), 0)
        assert nm.degenerate == (True, False)

    def test_nondegenerate_columns_attain_both_ends(self):
        rng = np.random.default_rng(1)
        for _ in range(25):
            nm = max_min_normalize(random_problem(rng))
            for j, flag in enumerate(nm.degenerate):
                if not flag:
                    assert nm.values[:, j].min() == 0.0
                    assert nm.values[:, j].max() == 1.0


class TestAadm:
    def test_india_row(self, india_problem):
        nm = max_min_normalize(india_problem)
        assert_close(aadm(nm), INDIA_AADM, 5e-4)
        assert_close(nm.aadm, INDIA_AADM, 5e-4)

    def test_constant_column_zero(self):
        nm = max_min_normalize(small_problem([[5, 0], [5, 1], [5, 2]]))
        assert nm.aadm[0] == 0.0

    def test_two_point_column_half(self):
        nm = max_min_normalize(small_problem([[0], [1]]))
        assert nm.aadm[0] == pytest.approx(0.5, abs=1e-15)

    def test_bounded_by_half(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            nm = max_min_normalize(random_problem(rng))
            assert (nm.aadm >= 0).all()
            assert (nm.aadm <= 0.5 + 1e-15).all()


class TestObjectiveWeights:
    def test_india(self, india_problem):
        w = objective_weights(india_problem)
        assert w.provenance is Provenance.OBJECTIVE
        assert_close(w.values, INDIA_OBJECTIVE, 5e-4)

    def test_saudi(self, saudi_problem):
        assert_close(objective_weights(saudi_problem).values,
                     SAUDI_OBJECTIVE, 5e-4)

    def test_affine_copies_share_weight_equally(self):
        col = np.array([1.0, 4.0, 2.0, 7.0])
        p = small_problem(np.column_stack([col, 3 * col - 5]))
        assert_close(objective_weights(p).values, (0.5, 0.5), 1e-12)

    def test_all_degenerate_rejected(self):
        with pytest.raises(NumericError, match="degenerate"):
            objective_weights(small_problem([[1, 2], [1, 2]]))

    def test_affine_invariance(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            p = random_problem(rng)
            base = objective_weights(p).array
            a = rng.uniform(0.1, 5, p.n) * rng.choice([-1, 1], p.n)
            b = rng.uniform(-20, 20, p.n)
            rescaled = p.replace_matrix(p.matrix * a + b)
            assert_close(objective_weights(rescaled).array, base, 1e-12)

    def test_direction_is_ignored(self, india_problem):
        flipped = DecisionProblem(
            [CriterionSpec(c.code, c.name, c.unit, c.direction.flipped(), c.group)
             for c in india_problem.criteria],
            india_problem.alternatives, india_problem.matrix)
        assert_close(objective_weights(flipped).values,
                     objective_weights(india_problem).values, 0)


class TestCombine:
    def _wv(self, values, provenance=Provenance.SUBJECTIVE):
        # table columns carry 4-dp rounding; renormalize before building
        # (combine is invariant to pre-normalization scaling)
        v = np.asarray(values, dtype=float)
        return WeightVector([f"C{j+1}" for j in range(len(values))],
                            v / v.sum(), provenance)

    def test_india(self):
        ws = self._wv(INDIA_SUBJECTIVE)
        wo = self._wv(INDIA_OBJECTIVE, Provenance.OBJECTIVE)
        final = combine(ws, wo)
        assert final.provenance is Provenance.FINAL
        assert_close(final.values, INDIA_FINAL, 5e-4)

    def test_saudi(self):
        final = combine(self._wv(SAUDI_SUBJECTIVE),
                        self._wv(SAUDI_OBJECTIVE, Provenance.OBJECTIVE))
        assert_close(final.values, SAUDI_FINAL, 5e-4)

    def test_uniform_subjective_returns_objective(self):
        wo = self._wv((0.1, 0.2, 0.3, 0.4), Provenance.OBJECTIVE)
        ws = self._wv((0.25,) * 4)
        assert_close(combine(ws, wo).values, wo.values, 1e-12)

    def test_symmetric(self):
        ws = self._wv((0.5, 0.3, 0.2))
        wo = self._wv((0.2, 0.2, 0.6), Provenance.OBJECTIVE)
        assert_close(combine(ws, wo).values, combine(wo, ws).values, 1e-15)

    def test_prenormalization_scale_invariance(self):
        # scaling one side before its own normalization cancels out
        raw = np.array([3.0, 1.0, 6.0])
        for c in (1.0, 2.5, 17.0):
            ws = self._wv(c * raw / (c * raw).sum())
            wo = self._wv((0.2, 0.3, 0.5), Provenance.OBJECTIVE)
            assert_close(combine(ws, wo).values,
                         combine(self._wv(raw / raw.sum()), wo).values, 1e-12)

    def test_label_mismatch(self):
        ws = WeightVector(("a", "b"), (0.5, 0.5), Provenance.SUBJECTIVE)
        wo = WeightVector(("b", "a"), (0.5, 0.5), Provenance.OBJECTIVE)
        with pytest.raises(ValidationError, match="label"):
            combine(ws, wo)

    def test_erased_preference_warns(self):
        ws = self._wv((0.5, 0.5))
        wo = self._wv((0.0, 1.0), Provenance.OBJECTIVE)
        with pytest.warns(ErasedPreferenceWarning, match="C1"):
            final = combine(ws, wo)
        assert final.values == (0.0, 1.0)

    def test_zero_denominator(self):
        ws = self._wv((1.0, 0.0))
        wo = self._wv((0.0, 1.0), Provenance.OBJECTIVE)
        with pytest.raises(NumericError, match="zero"):
            combine(ws, wo)

    def test_results_sum_to_one(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            n = int(rng.integers(1, 10))
            ws = self._wv(rng.dirichlet(np.ones(n)))
            wo = self._wv(rng.dirichlet(np.ones(n)), Provenance.OBJECTIVE)
            final = combine(ws, wo)
            assert sum(final.values) == pytest.approx(1.0, abs=1e-9)
            assert all(v >= 0 for v in final.values)


def test_normalization_table_matches_block(india_problem):
    table = normalization_table(india_problem)
    assert table["criteria"] == list(india_problem.codes)
    assert_close(table["normalized"], INDIA_NORMALIZED, 5e-4)
    assert_close(table["medians"], INDIA_MEDIANS, 5e-4)
    assert_close(table["aadm"], INDIA_AADM, 5e-4)
