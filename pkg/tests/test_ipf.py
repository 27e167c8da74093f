import numpy as np
import pytest

from interinfo.errors import ArityError, AxisNotFoundError, MarginCoverageError
from interinfo.ipf import (
    all_pairs,
    full_report,
    interaction_information,
    ipf_fit,
    normalize_margins,
    redundancy,
)
from interinfo.measures import co_information, entropy, marginalize
from interinfo.table import JointTable, axes_like

from conftest import random_table

PAIRS = (("x", "y"), ("x", "z"), ("y", "z"))


class TestMarginHandling:
    def test_normalize_sorts_and_dedupes(self):
        margins = normalize_margins([("z", "y"), ("y", "x"), ("x", "y")])
        assert margins == (("x", "y"), ("y", "z"))

    def test_all_pairs(self):
        assert all_pairs(["z", "x", "y"]) == PAIRS

    def test_uncovered_axis_rejected(self, xor_table):
        with pytest.raises(MarginCoverageError, match="z"):
            ipf_fit(xor_table, [("x", "y")])

    def test_empty_margin_set_rejected(self, xor_table):
        with pytest.raises(MarginCoverageError):
            ipf_fit(xor_table, [])

    def test_unknown_axis_rejected(self, xor_table):
        with pytest.raises(AxisNotFoundError):
            ipf_fit(xor_table, [("x", "w"), ("y", "z")])


class TestFitExamples:
    def test_xor_fits_to_uniform(self, xor_table):
        result = ipf_fit(xor_table, PAIRS)
        assert result.converged
        assert result.fitted.cells == pytest.approx(np.full((2, 2, 2), 0.125), abs=1e-12)
        assert entropy(result.fitted) == pytest.approx(3.0, abs=1e-9)

    def test_independent_fits_to_itself(self, independent_table):
        result = ipf_fit(independent_table, PAIRS)
        assert result.converged
        assert result.iterations == 1
        assert result.fitted.cells == pytest.approx(independent_table.cells, abs=1e-12)

    def test_copy_fits_to_itself(self, copy_table):
        result = ipf_fit(copy_table, PAIRS)
        assert result.converged
        assert result.fitted.cells == pytest.approx(copy_table.cells, abs=1e-12)
        assert entropy(result.fitted) == pytest.approx(1.0, abs=1e-9)

    def test_single_full_margin_reproduces_table(self, independent_table):
        result = ipf_fit(independent_table, [("x", "y", "z")])
        assert result.converged
        assert result.fitted.cells == pytest.approx(independent_table.cells, abs=1e-12)


class TestFitProperties:
    def test_margin_fidelity_when_converged(self):
        rng = np.random.default_rng(21)
        for _ in range(30):
            table = random_table(rng, tuple(rng.integers(2, 5, size=3)), ["x", "y", "z"])
            result = ipf_fit(table, PAIRS)
            assert result.converged
            for pair in PAIRS:
                got = marginalize(result.fitted, pair).cells
                want = marginalize(table, pair).cells
                assert np.max(np.abs(got - want)) <= 1e-10

    def test_maxent_dominance(self):
        rng = np.random.default_rng(22)
        for _ in range(50):
            table = random_table(rng, (3, 3, 3), ["x", "y", "z"])
            result = ipf_fit(table, PAIRS)
            assert entropy(result.fitted) >= entropy(table) - 1e-9

    def test_error_history_monotone_on_dense_tables(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            table = random_table(rng, (3, 3, 3), ["x", "y", "z"])
            history = ipf_fit(table, PAIRS).error_history
            assert all(b <= a + 1e-12 for a, b in zip(history, history[1:]))

    def test_refit_of_example_fits_converges_in_one_iteration(
        self, xor_table, copy_table, independent_table
    ):
        for table in (xor_table, copy_table, independent_table):
            first = ipf_fit(table, PAIRS)
            second = ipf_fit(first.fitted, PAIRS)
            assert second.converged
            assert second.iterations == 1

    def test_fit_map_is_idempotent(self):
        # fitted tables are fixed points: refitting changes nothing
        rng = np.random.default_rng(24)
        for _ in range(10):
            table = random_table(rng, (3, 3, 3), ["x", "y", "z"])
            first = ipf_fit(table, PAIRS)
            second = ipf_fit(first.fitted, PAIRS)
            assert second.fitted.cells == pytest.approx(first.fitted.cells, abs=1e-8)

    def test_zero_margins_stay_zero(self):
        cells = np.zeros((2, 2, 2))
        cells[0, 0, 0] = 0.5
        cells[0, 1, 1] = 0.5
        table = JointTable(axes_like(["x", "y", "z"], (2, 2, 2)), cells)
        result = ipf_fit(table, PAIRS)
        # x=1 has zero mass in every margin, so the whole slab stays zero
        assert np.all(result.fitted.cells[1] == 0.0)

    def test_non_convergence_is_flagged_not_raised(self, xor_table):
        # one cycle cannot reach a 1e-30 tolerance on a non-trivial table
        rng = np.random.default_rng(25)
        table = random_table(rng, (3, 3, 3), ["x", "y", "z"])
        result = ipf_fit(table, PAIRS, tolerance=1e-30, max_iterations=2)
        assert not result.converged
        assert result.iterations == 2
        assert result.max_margin_error > 1e-30

    def test_error_history_length_matches_iterations(self):
        rng = np.random.default_rng(26)
        table = random_table(rng, (3, 3, 3), ["x", "y", "z"])
        result = ipf_fit(table, PAIRS)
        assert len(result.error_history) == result.iterations
        assert result.error_history[-1] == result.max_margin_error


class TestInteractionInformation:
    def test_xor_is_one_bit(self, xor_table):
        assert interaction_information(xor_table, PAIRS) == pytest.approx(1.0, abs=1e-6)

    def test_independent_is_zero(self, independent_table):
        assert interaction_information(independent_table, PAIRS) == pytest.approx(0.0, abs=1e-9)

    def test_copy_is_zero(self, copy_table):
        assert interaction_information(copy_table, PAIRS) == pytest.approx(0.0, abs=1e-9)

    def test_never_meaningfully_negative(self):
        rng = np.random.default_rng(27)
        for _ in range(40):
            table = random_table(rng, (2, 3, 4), ["x", "y", "z"])
            assert interaction_information(table, PAIRS) >= -1e-9


class TestRedundancy:
    def test_paper_figure_value(self):
        assert redundancy(0.25, 0.0) == pytest.approx(0.25, abs=1e-12)

    def test_sign_conventions(self):
        assert redundancy(1.0, -1.0) == pytest.approx(2.0, abs=1e-12)
        assert redundancy(0.0, 0.0) == 0.0
        assert redundancy(0.0, 1.0) == pytest.approx(-1.0, abs=1e-12)


class TestFullReport:
    def test_xor_report(self, xor_table):
        report = full_report(xor_table)
        assert report.mu_star == pytest.approx(-1.0, abs=1e-9)
        assert report.q == pytest.approx(1.0, abs=1e-9)
        assert report.interaction_information == pytest.approx(1.0, abs=1e-6)
        assert report.redundancy == pytest.approx(2.0, abs=1e-6)
        assert report.r_krippendorff == pytest.approx(0.0, abs=1e-6)
        assert report.ipf_converged

    def test_copy_report(self, copy_table):
        report = full_report(copy_table)
        assert report.mu_star == pytest.approx(1.0, abs=1e-9)
        assert report.q == pytest.approx(-1.0, abs=1e-9)
        assert report.interaction_information == pytest.approx(0.0, abs=1e-9)
        assert report.redundancy == pytest.approx(-1.0, abs=1e-6)

    def test_uniform_report_is_all_zero(self):
        table = JointTable.uniform(axes_like(["x", "y", "z"], (2, 2, 2)))
        report = full_report(table)
        assert report.mu_star == pytest.approx(0.0, abs=1e-12)
        assert report.interaction_information == pytest.approx(0.0, abs=1e-9)
        assert report.redundancy == pytest.approx(0.0, abs=1e-9)

    def test_definitional_identities_hold_exactly(self):
        rng = np.random.default_rng(28)
        for _ in range(20):
            table = random_table(rng, (3, 3, 3), ["x", "y", "z"])
            report = full_report(table)
            assert report.q == -report.mu_star
            assert report.redundancy == report.interaction_information - report.mu_star
            assert report.r_krippendorff == report.interaction_information - report.q
            assert report.mu_star == pytest.approx(co_information(table), abs=1e-12)

    def test_entropies_present(self, xor_table):
        report = full_report(xor_table)
        assert report.axis_entropies == {"x": 1.0, "y": 1.0, "z": 1.0}
        assert report.pair_entropies == {"x,y": 2.0, "x,z": 2.0, "y,z": 2.0}
        assert report.joint_entropy == pytest.approx(2.0, abs=1e-12)

    def test_settings_recorded(self, xor_table):
        report = full_report(xor_table, tolerance=1e-8, max_iterations=50)
        assert report.tolerance == 1e-8
        assert report.max_iterations == 50
        d = report.to_dict()
        assert d["settings"] == {"tolerance": 1e-8, "max_iterations": 50}
        assert d["ipf"]["converged"] is True

    def test_wrong_arity_rejected(self):
        table = JointTable.uniform(axes_like(["x", "y"], (2, 2)))
        with pytest.raises(ArityError):
            full_report(table)
