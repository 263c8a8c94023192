import numpy as np
import pytest

from shared.models.results import PerformanceProfile
from shared.utils.errors import ConfigurationError
from ttp_evolver.evolve import bimodality_report, gap_statistic
from ttp_evolver.fitness import build_profile


def _profile(rows) -> PerformanceProfile:
    return build_profile(rows, ["S2", "S4", "C2"][:len(rows)])


def test_gap_statistic():
    assert gap_statistic(np.array([10.0, 10.0, 1.0, 1.0, 10.0])) == 1.0
    assert gap_statistic(np.array([3.0, 3.0, 3.0])) == 0.0
    assert gap_statistic(np.array([0.0, 1.0, 2.0, 4.0])) == 0.5


def test_constant_rows_raise_no_flag():
    report = bimodality_report(_profile([[5.0] * 5, [5.0] * 5, [5.0] * 5]))
    assert not report.overlap_flag
    assert all(row.gap_statistic == 0.0 and row.iqr == 0.0 for row in report.solvers)


def test_two_local_optima_overlap_is_flagged():
    report = bimodality_report(_profile([[10, 10, 1, 1, 10], [10, 1, 1, 10, 1]]))
    assert report.best_solver == "S2"
    assert report.worst_solver == "S4"
    assert report.overlap_flag
    assert report.solvers[0].median == 10.0
    assert report.solvers[1].median == 1.0
    assert report.solvers[0].gap_statistic == 1.0


def test_separated_solvers_are_not_flagged():
    report = bimodality_report(_profile([[1, 2, 3], [7, 8, 9], [4, 5, 6]]))
    assert report.best_solver == "S4"
    assert report.worst_solver == "S2"
    assert not report.overlap_flag


def test_epsilon_widens_the_overlap():
    rows = [[1, 2, 3], [7, 8, 9]]
    assert not bimodality_report(_profile(rows)).overlap_flag
    assert bimodality_report(_profile(rows), epsilon=6.0).overlap_flag


def test_single_run_profile_rejected():
    with pytest.raises(ConfigurationError):
        bimodality_report(_profile([[1.0], [2.0]]))
