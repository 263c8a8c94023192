"""
Bitflip - deterministic single-item toggles over the packing plan
"""
from typing import Optional, Tuple

import numpy as np

from shared.models.ttp_models import TtpInstance, TtpSolution
from ttp_engine.core.objective import ObjectiveEvaluator
from ttp_engine.solvers.base_pass import SearchState, SolutionPass, improves


class BitflipPass(SolutionPass):
    """Toggle each item in index order, keeping feasible strict improvements"""

    name = "bitflip"

    def apply(self, state: SearchState, rng: Optional[np.random.Generator] = None) -> bool:
        evaluator = self.evaluator
        improved = False

        for item in range(evaluator.m):
            state.packing[item] = 1.0 - state.packing[item]
            if evaluator.is_feasible(state.packing):
                candidate = evaluator.objective(state.tour, state.packing)
                if improves(candidate, state.objective):
                    state.objective = candidate
                    self.accepted_moves += 1
                    improved = True
                    continue
            state.packing[item] = 1.0 - state.packing[item]

        return improved


def bitflip_pass(instance: TtpInstance, solution: TtpSolution) -> Tuple[TtpSolution, bool]:
    """One Bitflip sweep; returns the updated solution and whether it improved"""
    return BitflipPass(ObjectiveEvaluator(instance)).run_on(solution)
