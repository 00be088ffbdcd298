import numpy as np
import pytest

from somit import (
    AffineColumn,
    CellReplace,
    ComplementColumn,
    Direction,
    NumericError,
    PerturbationScenario,
    Provenance,
    ReciprocalColumn,
    ValidationError,
    WeightVector,
    aafd_w,
    apply_scenario,
    critic_weights,
    objective_weights,
    robustness_report,
)

from conftest import assert_close

SCALE_SHIFT = PerturbationScenario((
    AffineColumn("C6", a=2, b=-1),
    ReciprocalColumn("C7", flip_direction=True),
    ComplementColumn("C9", c=1),
))

OUTLIER = PerturbationScenario((CellReplace("Solar", "C7", 480.0),))


class TestApplyScenario:
    def test_scale_shift_matrix(self, india_problem):
        modified = apply_scenario(india_problem, SCALE_SHIFT)
        expected = np.array(india_problem.matrix)
        expected[:, 5] = 2 * expected[:, 5] - 1
        expected[:, 6] = 1.0 / expected[:, 6]
        expected[:, 8] = 1.0 - expected[:, 8]
        assert_close(modified.matrix, expected, 1e-12)
        assert modified.column("C6")[0] == 7.0
        assert modified.column("C7")[0] == pytest.approx(1 / 48, abs=1e-12)
        assert modified.column("C9")[0] == pytest.approx(0.13, abs=1e-12)

    def test_scale_shift_directions(self, india_problem):
        modified = apply_scenario(india_problem, SCALE_SHIFT)
        dirs = dict(zip(modified.codes, modified.directions))
        assert dirs["C6"] is Direction.BENEFIT      # a > 0 keeps sense
        assert dirs["C7"] is Direction.BENEFIT      # reciprocal of a cost
        assert dirs["C9"] is Direction.COST         # complement flips
        assert dirs["C1"] is Direction.COST

    def test_negative_affine_flips_direction(self, india_problem):
        modified = apply_scenario(
            india_problem,
            PerturbationScenario((AffineColumn("C4", a=-1, b=100),)))
        assert dict(zip(modified.codes, modified.directions))["C4"] \
            is Direction.COST

    def test_outlier_cell(self, india_problem):
        modified = apply_scenario(india_problem, OUTLIER)
        assert modified.matrix[0, 6] == 480.0
        # only that one cell moved
        mask = np.ones_like(india_problem.matrix, dtype=bool)
        mask[0, 6] = False
        assert np.array_equal(modified.matrix[mask], india_problem.matrix[mask])

    def test_empty_scenario_identity(self, india_problem):
        modified = apply_scenario(india_problem, PerturbationScenario())
        assert modified == india_problem

    def test_inverse_edits_compose_to_identity(self, india_problem):
        forward = PerturbationScenario((
            AffineColumn("C1", a=2.0, b=3.0),
            ReciprocalColumn("C2"),
            ComplementColumn("C4", c=100.0),
        ))
        backward = PerturbationScenario((
            AffineColumn("C1", a=0.5, b=-1.5),
            ReciprocalColumn("C2"),
            ComplementColumn("C4", c=100.0),
        ))
        round_trip = apply_scenario(apply_scenario(india_problem, forward),
                                    backward)
        assert_close(round_trip.matrix, india_problem.matrix, 1e-12)
        assert round_trip.directions == india_problem.directions

    def test_original_untouched(self, india_problem):
        before = india_problem.matrix.copy()
        apply_scenario(india_problem, OUTLIER)
        assert np.array_equal(india_problem.matrix, before)

    def test_reciprocal_of_zero_rejected(self, india_problem):
        zeroed = india_problem.replace_matrix(
            np.where(india_problem.matrix == 11, 0.0, india_problem.matrix))
        with pytest.raises(ValidationError, match="zero"):
            apply_scenario(zeroed,
                           PerturbationScenario((ReciprocalColumn("C7"),)))

    def test_zero_scale_rejected(self, india_problem):
        with pytest.raises(ValidationError, match="a != 0"):
            apply_scenario(india_problem,
                           PerturbationScenario((AffineColumn("C1", a=0),)))

    def test_unknown_labels_rejected(self, india_problem):
        with pytest.raises(ValidationError, match="unknown criterion"):
            apply_scenario(india_problem,
                           PerturbationScenario((ReciprocalColumn("X9"),)))
        with pytest.raises(ValidationError, match="unknown alternative"):
            apply_scenario(
                india_problem,
                PerturbationScenario((CellReplace("Coal", "C1", 1.0),)))


class TestAafd:
    def _wv(self, values):
        return WeightVector([f"C{j}" for j in range(len(values))], values,
                            Provenance.OBJECTIVE)

    def test_identical_zero(self):
        w = self._wv((0.25, 0.75))
        assert aafd_w(w, w) == 0.0

    def test_two_weight_example(self):
        got = aafd_w(self._wv((0.5, 0.5)), self._wv((0.6, 0.4)))
        assert got == pytest.approx((0.1 / 0.55 + 0.1 / 0.45) / 2, abs=1e-12)

    def test_symmetric(self):
        a, b = self._wv((0.5, 0.3, 0.2)), self._wv((0.4, 0.35, 0.25))
        assert aafd_w(a, b) == aafd_w(b, a)

    def test_zero_pair_contributes_zero(self):
        a = self._wv((0.0, 1.0))
        b = self._wv((0.0, 1.0))
        assert aafd_w(a, b) == 0.0

    def test_zero_iff_equal(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            n = int(rng.integers(2, 8))
            a = self._wv(rng.dirichlet(np.ones(n)))
            b = self._wv(rng.dirichlet(np.ones(n)))
            assert aafd_w(a, b) > 0 or a.values == b.values

    def test_label_mismatch(self):
        a = WeightVector(("x", "y"), (0.5, 0.5), Provenance.OBJECTIVE)
        with pytest.raises(ValidationError, match="label"):
            aafd_w(a, self._wv((0.5, 0.5)))


class TestRobustness:
    def test_scale_shift_dispersion_weights(self, india_problem):
        modified = apply_scenario(india_problem, SCALE_SHIFT)
        deviation = aafd_w(objective_weights(india_problem),
                           objective_weights(modified))
        assert deviation == pytest.approx(0.019, abs=0.003)

    def test_scale_shift_critic_larger(self, india_problem):
        modified = apply_scenario(india_problem, SCALE_SHIFT)
        somit = aafd_w(objective_weights(india_problem),
                       objective_weights(modified))
        critic = aafd_w(critic_weights(india_problem),
                        critic_weights(modified))
        assert critic > somit

    def test_pure_affine_scenario_exactly_invariant(self, india_problem):
        scenario = PerturbationScenario((
            AffineColumn("C1", a=3.0, b=-2.0),
            ComplementColumn("C4", c=100.0),
            AffineColumn("C9", a=-0.5, b=1.0),
        ))
        modified = apply_scenario(india_problem, scenario)
        deviation = aafd_w(objective_weights(india_problem),
                           objective_weights(modified))
        assert deviation <= 1e-12

    def test_report_structure(self, india_problem):
        report = robustness_report(
            india_problem, SCALE_SHIFT,
            {"somit-ii": objective_weights, "critic": critic_weights})
        assert report["criteria"] == list(india_problem.codes)
        for name in ("somit-ii", "critic"):
            block = report["methods"][name]
            assert len(block["original"]) == 10
            assert len(block["perturbed"]) == 10
            assert block["aafd_w"] >= 0
            assert block["max_abs_change"] >= 0
        assert report["methods"]["critic"]["aafd_w"] > \
            report["methods"]["somit-ii"]["aafd_w"]

    def test_outlier_report_shift_comparison(self, india_problem):
        report = robustness_report(
            india_problem, OUTLIER,
            {"somit-ii": objective_weights, "critic": critic_weights})
        assert report["methods"]["somit-ii"]["max_abs_change"] < \
            report["methods"]["critic"]["max_abs_change"]

    def test_identity_scenario_all_zero(self, india_problem):
        report = robustness_report(
            india_problem, PerturbationScenario(),
            {"somit-ii": objective_weights, "critic": critic_weights})
        for block in report["methods"].values():
            assert block["aafd_w"] == 0.0
            assert block["max_abs_change"] == 0.0
