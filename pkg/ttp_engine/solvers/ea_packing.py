"""
(1+1)-EA packing pass - random 1/m bit toggles with elitist acceptance
"""
from typing import Optional, Tuple

import numpy as np

from shared.models.ttp_models import TtpInstance, TtpSolution
from ttp_engine.core.objective import ObjectiveEvaluator
from ttp_engine.solvers.base_pass import SearchState, SolutionPass, improves


class EaPackingPass(SolutionPass):
    """m iterations of standard bit mutation on the packing plan"""

    name = "ea"

    def apply(self, state: SearchState, rng: Optional[np.random.Generator] = None) -> bool:
        if rng is None:
            raise ValueError("EaPackingPass needs a random generator")

        evaluator = self.evaluator
        m = evaluator.m
        rate = 1.0 / m
        improved = False

        for _ in range(m):
            flips = rng.random(m) < rate
            if not flips.any():
                continue
            mutant = np.where(flips, 1.0 - state.packing, state.packing)
            if not evaluator.is_feasible(mutant):
                continue
            candidate = evaluator.objective(state.tour, mutant)
            if improves(candidate, state.objective):
                state.packing = mutant
                state.objective = candidate
                self.accepted_moves += 1
                improved = True

        return improved


def ea_packing_pass(
    instance: TtpInstance,
    solution: TtpSolution,
    seed: int
) -> Tuple[TtpSolution, bool]:
    """One (1+1)-EA pass, deterministic given the seed"""
    return EaPackingPass(ObjectiveEvaluator(instance)).run_on(solution, np.random.default_rng(seed))
