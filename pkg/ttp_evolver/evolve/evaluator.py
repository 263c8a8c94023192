"""
Profile Evaluator - runs each portfolio solver k times on an instance
"""
from typing import List, Optional, Sequence

from joblib import Parallel, delayed

from shared.config.constants import PORTFOLIO, STREAM_SOLVER_RUN, SolverId
from shared.models.results import PerformanceProfile
from shared.models.ttp_models import SolverBudget, TtpInstance
from shared.utils.seeding import derive_seed
from ttp_engine.solvers.portfolio import PortfolioSolver
from ttp_evolver.fitness.aggregation import build_profile


def run_seed(seed: int, solver_position: int, run: int) -> int:
    """Seed of one solver run, fixed by its position in the score matrix"""
    return derive_seed(seed, STREAM_SOLVER_RUN, solver_position, run)


def _run_solver(solver: PortfolioSolver, solver_id: SolverId, budget: SolverBudget) -> float:
    return solver.solve(solver_id, budget).objective


def evaluate_profile(
    instance: TtpInstance,
    portfolio: Sequence[SolverId] = PORTFOLIO,
    k: int = 5,
    seed: int = 0,
    budget: Optional[SolverBudget] = None,
    n_jobs: int = 1,
    quantile: Optional[float] = None
) -> PerformanceProfile:
    """N x k performance profile with per-solver aggregates.

    Args:
        instance: Instance to evaluate
        portfolio: Solvers, one profile row each
        k: Independent runs per solver
        seed: Base seed; every run derives its own from (solver, run)
        budget: Solver budget template, its seed is replaced per run
        n_jobs: joblib worker count for the N x k runs
        quantile: Aggregation quantile, None for the median

    Returns:
        PerformanceProfile, identical for identical (instance, seed) at any n_jobs
    """
    if k < 1:
        raise ValueError("Each solver needs at least one run")
    budget = budget or SolverBudget()
    solver = PortfolioSolver(instance)

    tasks = [
        (solver_id, budget.with_seed(run_seed(seed, position, run)))
        for position, solver_id in enumerate(portfolio)
        for run in range(k)
    ]
    objectives: List[float] = Parallel(n_jobs=n_jobs)(
        delayed(_run_solver)(solver, solver_id, run_budget) for solver_id, run_budget in tasks
    )

    scores = [objectives[row * k:(row + 1) * k] for row in range(len(portfolio))]
    return build_profile(scores, [solver_id.value for solver_id in portfolio], quantile)
