"""
Insertion - deterministic city re-insertion over the tour
"""
from typing import Optional, Tuple

import numpy as np

from shared.models.ttp_models import TtpInstance, TtpSolution
from ttp_engine.core.objective import ObjectiveEvaluator
from ttp_engine.solvers.base_pass import SearchState, SolutionPass, improves


class InsertionPass(SolutionPass):
    """For each city in tour order, apply its best strictly improving re-insertion"""

    name = "insertion"

    def apply(self, state: SearchState, rng: Optional[np.random.Generator] = None) -> bool:
        evaluator = self.evaluator
        n = evaluator.n

        # A 3-node tour has a single edge set; the only other order is its reversal
        if n <= 3:
            return False

        improved = False
        for city in state.tour[1:].tolist():
            position = int(np.flatnonzero(state.tour == city)[0])
            reduced = np.delete(state.tour, position)
            slots = [slot for slot in range(1, n) if slot != position]
            candidates = np.array([np.insert(reduced, slot, city) for slot in slots])

            values = evaluator.batch_objective(candidates, state.packing)
            best = int(np.argmax(values))
            if improves(float(values[best]), state.objective):
                state.tour = candidates[best]
                state.objective = evaluator.objective(state.tour, state.packing)
                self.accepted_moves += 1
                improved = True

        return improved


def insertion_pass(instance: TtpInstance, solution: TtpSolution) -> Tuple[TtpSolution, bool]:
    """One Insertion sweep; the packing is left unchanged"""
    return InsertionPass(ObjectiveEvaluator(instance)).run_on(solution)
