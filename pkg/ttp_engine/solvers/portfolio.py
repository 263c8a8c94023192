"""
Solver Portfolio - S2, S4 and C2 as tour + PackIterative + iterated hill-climbing
"""
import time
from typing import Dict, List, Optional, Tuple, Type, Union

import numpy as np

from shared.config.constants import SolverId
from shared.models.ttp_models import SolverBudget, TtpInstance, TtpSolution
from shared.utils.logger import get_logger
from ttp_engine.core.objective import ObjectiveEvaluator
from ttp_engine.solvers.base_pass import SearchState, SolutionPass
from ttp_engine.solvers.bitflip import BitflipPass
from ttp_engine.solvers.ea_packing import EaPackingPass
from ttp_engine.solvers.insertion import InsertionPass
from ttp_engine.solvers.pack_iterative import PackIterative
from ttp_engine.solvers.tour_builder import chained_two_opt

logger = get_logger(__name__)

# Passes repeated until a full cycle yields no improvement
SOLVER_CYCLES: Dict[SolverId, Tuple[Type[SolutionPass], ...]] = {
    SolverId.S2: (BitflipPass,),
    SolverId.S4: (InsertionPass,),
    SolverId.C2: (BitflipPass, EaPackingPass, InsertionPass),
}


class PortfolioSolver:
    """Runs portfolio solvers on one instance, sharing precomputed distances"""

    def __init__(self, instance: TtpInstance, evaluator: Optional[ObjectiveEvaluator] = None):
        self.instance = instance
        self.evaluator = evaluator or ObjectiveEvaluator(instance)
        self.last_trace: List[float] = []
        self.last_cycles = 0
        self.last_accepted: Dict[str, int] = {}
        self.last_timed_out = False

    def starting_point(self, budget: SolverBudget, rng: np.random.Generator) -> SearchState:
        """Tour from the chained 2-opt builder, packing from PackIterative"""
        tour = chained_two_opt(self.evaluator.distances, rng, budget.kicks)
        packing, value = PackIterative(self.evaluator, budget.alpha_probes).pack(tour)
        return SearchState(tour, packing, value)

    def solve(
        self,
        solver_id: Union[SolverId, str],
        budget: Optional[SolverBudget] = None
    ) -> TtpSolution:
        solver_id = SolverId(solver_id)
        budget = budget or SolverBudget()
        rng = np.random.default_rng(budget.rng_seed)
        started = time.perf_counter()

        state = self.starting_point(budget, rng)
        passes = [pass_type(self.evaluator) for pass_type in SOLVER_CYCLES[solver_id]]
        trace = [state.objective]
        cycles = 0
        timed_out = False

        while cycles < budget.max_passes:
            improved = False
            for solution_pass in passes:
                improved |= solution_pass.apply(state, rng)
                trace.append(state.objective)
            cycles += 1
            if not improved:
                break
            if budget.wall_time_limit is not None and time.perf_counter() - started > budget.wall_time_limit:
                timed_out = True
                break

        self.last_trace = trace
        self.last_cycles = cycles
        self.last_accepted = {p.name: p.accepted_moves for p in passes}
        self.last_timed_out = timed_out
        moves = " ".join(f"{name}={count}" for name, count in self.last_accepted.items())
        logger.debug(
            f"{solver_id.value} seed={budget.rng_seed}: objective {state.objective:.2f} "
            f"after {cycles} cycles, accepted {moves}"
            + (", stopped by time limit" if timed_out else "")
        )
        return self.evaluator.solution(state.tour, state.packing, solver_id.value)


def solve(
    instance: TtpInstance,
    solver_id: Union[SolverId, str],
    budget: Optional[SolverBudget] = None
) -> TtpSolution:
    """Run one portfolio solver; fully determined by (instance, budget)"""
    return PortfolioSolver(instance).solve(solver_id, budget)
