"""
TTP objective - CEIL_2D distances, profit/weight totals and total travel gain
"""
import math
from typing import Optional, Sequence

import numpy as np
from scipy.spatial.distance import cdist

from shared.models.ttp_models import TtpInstance, TtpSolution
from shared.utils.errors import InfeasiblePackingError


def ceil_distance_matrix(points: np.ndarray) -> np.ndarray:
    """Pairwise CEIL_2D distances of a point cloud"""
    return np.ceil(cdist(points, points))


def distance(instance: TtpInstance, i: int, j: int) -> float:
    """Ceiling of the Euclidean distance between nodes i and j"""
    (xi, yi), (xj, yj) = instance.coords[i], instance.coords[j]
    return float(math.ceil(math.hypot(xi - xj, yi - yj)))


def total_profit(packing: Sequence[int], profits: Sequence[float]) -> float:
    return float(np.dot(np.asarray(packing, dtype=float), np.asarray(profits, dtype=float)))


def total_weight(packing: Sequence[int], weights: Sequence[float]) -> float:
    return float(np.dot(np.asarray(packing, dtype=float), np.asarray(weights, dtype=float)))


class ObjectiveEvaluator:
    """Precomputed instance data for repeated objective evaluation.

    Knapsack weight at a city includes the items picked there; each leg's speed
    is set by the weight carried when leaving the leg's origin.
    """

    def __init__(self, instance: TtpInstance):
        self.instance = instance
        self.n = instance.n_nodes
        self.m = instance.n_items
        self.distances = ceil_distance_matrix(instance.coord_array())
        self.profits = np.asarray(instance.profits, dtype=float)
        self.weights = np.asarray(instance.weights, dtype=float)
        self.availability = np.asarray(instance.availability, dtype=int)
        self.capacity = float(instance.capacity)
        self.renting_rate = float(instance.renting_rate)
        self.v_max = float(instance.v_max)
        self.nu = (instance.v_max - instance.v_min) / instance.capacity

    def node_weights(self, packing: np.ndarray) -> np.ndarray:
        """Weight picked at each node"""
        return np.bincount(self.availability, weights=self.weights * packing, minlength=self.n)

    def packing_weight(self, packing: np.ndarray) -> float:
        return float(np.dot(self.weights, packing))

    def packing_profit(self, packing: np.ndarray) -> float:
        return float(np.dot(self.profits, packing))

    def is_feasible(self, packing: np.ndarray) -> bool:
        return self.packing_weight(packing) <= self.capacity

    def tour_length(self, tour: np.ndarray) -> float:
        return float(self.distances[tour, np.roll(tour, -1)].sum())

    def travel_time(self, tour: np.ndarray, packing: np.ndarray) -> float:
        carried = np.cumsum(self.node_weights(packing)[tour])
        legs = self.distances[tour, np.roll(tour, -1)]
        return float(np.sum(legs / (self.v_max - self.nu * carried)))

    def batch_travel_time(self, tours: np.ndarray, packing: np.ndarray) -> np.ndarray:
        """Travel times of many tours (rows) under one packing"""
        carried = np.cumsum(self.node_weights(packing)[tours], axis=1)
        legs = self.distances[tours, np.roll(tours, -1, axis=1)]
        return np.sum(legs / (self.v_max - self.nu * carried), axis=1)

    def objective(self, tour: np.ndarray, packing: np.ndarray) -> float:
        """Total travel gain; caller guarantees feasibility"""
        return self.packing_profit(packing) - self.renting_rate * self.travel_time(tour, packing)

    def batch_objective(self, tours: np.ndarray, packing: np.ndarray) -> np.ndarray:
        return self.packing_profit(packing) - self.renting_rate * self.batch_travel_time(tours, packing)

    def checked_objective(self, tour: np.ndarray, packing: np.ndarray) -> float:
        weight = self.packing_weight(packing)
        if weight > self.capacity:
            raise InfeasiblePackingError(weight, self.capacity)
        return self.objective(tour, packing)

    def solution(
        self,
        tour: np.ndarray,
        packing: np.ndarray,
        solver: Optional[str] = None
    ) -> TtpSolution:
        return TtpSolution(
            tour=[int(x) for x in tour],
            packing=[int(z) for z in packing],
            objective=self.checked_objective(tour, packing),
            solver=solver,
        )


def _validate_tour(tour: np.ndarray, n: int) -> None:
    if len(tour) != n or tour[0] != 0 or not np.array_equal(np.sort(tour), np.arange(n)):
        raise ValueError("Tour must be a permutation of all nodes starting at node 0")


def evaluate_objective(
    instance: TtpInstance,
    tour: Sequence[int],
    packing: Sequence[int]
) -> float:
    """Total travel gain g(Z) - R * f(X, Z)

    Raises InfeasiblePackingError when the packing exceeds the capacity.
    """
    evaluator = ObjectiveEvaluator(instance)
    tour_array = np.asarray(tour, dtype=int)
    packing_array = np.asarray(packing, dtype=float)
    _validate_tour(tour_array, evaluator.n)
    if len(packing_array) != evaluator.m:
        raise ValueError(f"Packing must have length {evaluator.m}")
    return evaluator.checked_objective(tour_array, packing_array)


def canonical_tour(tour: Sequence[int]) -> np.ndarray:
    """Rotate a cyclic tour so that it starts at node 0"""
    tour_array = np.asarray(tour, dtype=int)
    start = int(np.flatnonzero(tour_array == 0)[0])
    return np.roll(tour_array, -start)
