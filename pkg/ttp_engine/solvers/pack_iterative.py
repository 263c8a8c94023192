"""
PackIterative - score-based greedy packing with a tuned exponent

Items are scored by p^a / (w^a * d), d being the distance the item travels to
the end of the tour. The exponent a is searched by golden-section bracketing
over ALPHA_RANGE; every probe is a full greedy pack and the best packing over
all probes (and the empty packing) is returned.
"""
import math
from typing import List, Sequence, Tuple

import numpy as np

from shared.config.constants import ALPHA_RANGE, DEFAULT_ALPHA_PROBES
from shared.models.ttp_models import TtpInstance
from ttp_engine.core.objective import ObjectiveEvaluator
from ttp_engine.solvers.base_pass import improves

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def remaining_distances(evaluator: ObjectiveEvaluator, tour: np.ndarray) -> np.ndarray:
    """Distance from each item's city to the end of the tour"""
    legs = evaluator.distances[tour, np.roll(tour, -1)]
    remaining_from = np.cumsum(legs[::-1])[::-1]
    positions = np.empty(evaluator.n, dtype=int)
    positions[tour] = np.arange(evaluator.n)
    return remaining_from[positions[evaluator.availability]]


def item_scores(
    evaluator: ObjectiveEvaluator,
    distances_to_end: np.ndarray,
    alpha: float
) -> np.ndarray:
    # Duplicate coordinates can produce zero remaining distance
    d = np.maximum(distances_to_end, 1.0)
    return np.power(evaluator.profits, alpha) / (np.power(evaluator.weights, alpha) * d)


def greedy_pack(
    evaluator: ObjectiveEvaluator,
    tour: np.ndarray,
    scores: np.ndarray
) -> Tuple[np.ndarray, float]:
    """Add items by descending score while they fit and strictly improve the objective"""
    packing = np.zeros(evaluator.m)
    value = evaluator.objective(tour, packing)
    weight = 0.0

    for item in np.argsort(-scores, kind="stable"):
        item_weight = evaluator.weights[item]
        if weight + item_weight > evaluator.capacity:
            continue
        packing[item] = 1.0
        candidate = evaluator.objective(tour, packing)
        if improves(candidate, value):
            value = candidate
            weight += item_weight
        else:
            packing[item] = 0.0

    return packing, value


class PackIterative:
    """Exponent search around greedy_pack"""

    def __init__(self, evaluator: ObjectiveEvaluator, probes: int = DEFAULT_ALPHA_PROBES):
        self.evaluator = evaluator
        self.probes = probes

    def pack(self, tour: np.ndarray) -> Tuple[np.ndarray, float]:
        evaluator = self.evaluator
        to_end = remaining_distances(evaluator, tour)

        best_packing = np.zeros(evaluator.m)
        best_value = evaluator.objective(tour, best_packing)

        def probe(alpha: float) -> float:
            nonlocal best_packing, best_value
            packing, value = greedy_pack(evaluator, tour, item_scores(evaluator, to_end, alpha))
            if improves(value, best_value) and evaluator.is_feasible(packing):
                best_packing, best_value = packing, value
            return value

        low, high = ALPHA_RANGE
        x1 = high - INV_PHI * (high - low)
        x2 = low + INV_PHI * (high - low)
        f1, f2 = probe(x1), probe(x2)
        used = 2

        while used < self.probes:
            if f1 >= f2:
                high, x2, f2 = x2, x1, f1
                x1 = high - INV_PHI * (high - low)
                f1 = probe(x1)
            else:
                low, x1, f1 = x1, x2, f2
                x2 = low + INV_PHI * (high - low)
                f2 = probe(x2)
            used += 1

        return best_packing, best_value


def pack_iterative(
    instance: TtpInstance,
    tour: Sequence[int],
    probes: int = DEFAULT_ALPHA_PROBES
) -> List[int]:
    """Feasible packing whose objective is at least that of the empty packing"""
    evaluator = ObjectiveEvaluator(instance)
    packing, _ = PackIterative(evaluator, probes).pack(np.asarray(tour, dtype=int))
    return [int(z) for z in packing]
