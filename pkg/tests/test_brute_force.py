import numpy as np
import pytest

from shared.config.constants import PORTFOLIO
from shared.models.ttp_models import SolverBudget
from ttp_engine.core.objective import evaluate_objective
from ttp_engine.solvers import solve
from tests.oracles import exhaustive_optimum, random_small_instance, straight_line_objective


def test_solvers_never_beat_the_exhaustive_optimum():
    rng = np.random.default_rng(1234)
    budget = SolverBudget(kicks=5, alpha_probes=8)
    for trial in range(200):
        instance = random_small_instance(rng)
        optimum = exhaustive_optimum(instance)
        for solver_id in PORTFOLIO:
            solution = solve(instance, solver_id, budget.with_seed(trial))
            assert solution.objective <= optimum + 1e-9 * max(1.0, abs(optimum))
            assert solution.objective == pytest.approx(
                straight_line_objective(instance, solution.tour, solution.packing), rel=1e-12, abs=1e-9
            )
            assert solution.objective == evaluate_objective(instance, solution.tour, solution.packing)
