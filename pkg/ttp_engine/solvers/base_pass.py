"""
Base Solution Pass - Abstract class for all hill-climbing passes
"""
from abc import ABC, abstractmethod
from typing import Optional, Tuple

import numpy as np

from shared.config.constants import IMPROVEMENT_TOLERANCE
from shared.models.ttp_models import TtpSolution
from ttp_engine.core.objective import ObjectiveEvaluator


def improves(candidate: float, incumbent: float) -> bool:
    """Strict improvement, ignoring floating-point noise"""
    return candidate > incumbent + IMPROVEMENT_TOLERANCE * max(1.0, abs(incumbent))


class SearchState:
    """Mutable working copy of a solution during hill-climbing"""

    def __init__(self, tour: np.ndarray, packing: np.ndarray, objective: float):
        self.tour = np.asarray(tour, dtype=int).copy()
        self.packing = np.asarray(packing, dtype=float).copy()
        self.objective = float(objective)

    @classmethod
    def from_solution(cls, solution: TtpSolution) -> "SearchState":
        return cls(np.asarray(solution.tour), np.asarray(solution.packing), solution.objective)


class SolutionPass(ABC):
    """Base class for one deterministic or seeded sweep over a neighborhood"""

    name = "pass"

    def __init__(self, evaluator: ObjectiveEvaluator):
        self.evaluator = evaluator
        self.accepted_moves = 0

    @abstractmethod
    def apply(self, state: SearchState, rng: Optional[np.random.Generator] = None) -> bool:
        """
        Run one pass in place

        Args:
            state: Working solution, updated in place
            rng: Random generator for randomized passes

        Returns:
            True if at least one strictly improving move was accepted
        """
        pass

    def run_on(
        self,
        solution: TtpSolution,
        rng: Optional[np.random.Generator] = None
    ) -> Tuple[TtpSolution, bool]:
        """Apply the pass to an immutable solution"""
        if not self.evaluator.is_feasible(np.asarray(solution.packing, dtype=float)):
            raise ValueError("Pass input must be a feasible solution")
        state = SearchState.from_solution(solution)
        state.objective = self.evaluator.objective(state.tour, state.packing)
        improved = self.apply(state, rng)
        return self.evaluator.solution(state.tour, state.packing, solution.solver), improved
