"""
Tour construction - nearest neighbor, 2-opt and double-bridge chaining

Stands in for Chained Lin-Kernighan: a strong tour computed independently of
the knapsack component.
"""
from typing import List

import numpy as np

from shared.config.constants import DEFAULT_KICKS
from shared.models.ttp_models import TtpInstance
from ttp_engine.core.objective import ceil_distance_matrix
from shared.utils.logger import get_logger

logger = get_logger(__name__)


def tour_length(tour: np.ndarray, distances: np.ndarray) -> float:
    return float(distances[tour, np.roll(tour, -1)].sum())


def nearest_neighbor_tour(distances: np.ndarray) -> np.ndarray:
    """Greedy tour from node 0; ties go to the lowest node index"""
    n = len(distances)
    tour = np.empty(n, dtype=int)
    visited = np.zeros(n, dtype=bool)
    tour[0] = 0
    visited[0] = True
    for position in range(1, n):
        row = np.where(visited, np.inf, distances[tour[position - 1]])
        nxt = int(np.argmin(row))
        tour[position] = nxt
        visited[nxt] = True
    return tour


def two_opt(tour: np.ndarray, distances: np.ndarray) -> np.ndarray:
    """2-opt to convergence; node 0 keeps the first position"""
    tour = tour.copy()
    n = len(tour)
    if n < 4:
        return tour

    improved = True
    while improved:
        improved = False
        for i in range(n - 2):
            a, b = tour[i], tour[i + 1]
            js = np.arange(i + 2, n)
            c = tour[js]
            d = tour[(js + 1) % n]
            delta = distances[a, c] + distances[b, d] - distances[a, b] - distances[c, d]
            best = int(np.argmin(delta))
            if delta[best] < 0:
                j = int(js[best])
                tour[i + 1:j + 1] = tour[i + 1:j + 1][::-1]
                improved = True
    return tour


def double_bridge(tour: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Reconnect three segments A-C-B-D; the first segment keeps node 0 in front"""
    n = len(tour)
    p, q, r = np.sort(rng.choice(np.arange(1, n), size=3, replace=False))
    return np.concatenate([tour[:p], tour[q:r], tour[p:q], tour[r:]])


def chained_two_opt(
    distances: np.ndarray,
    rng: np.random.Generator,
    kicks: int = DEFAULT_KICKS
) -> np.ndarray:
    """Nearest neighbor + 2-opt, then kicks double-bridge restarts keeping the best tour"""
    best = two_opt(nearest_neighbor_tour(distances), distances)
    best_length = tour_length(best, distances)

    if len(best) < 5:
        return best

    for _ in range(kicks):
        candidate = two_opt(double_bridge(best, rng), distances)
        candidate_length = tour_length(candidate, distances)
        if candidate_length < best_length:
            best, best_length = candidate, candidate_length

    logger.debug(f"Chained 2-opt finished with tour length {best_length:.0f}")
    return best


def build_tour(instance: TtpInstance, seed: int, kicks: int = DEFAULT_KICKS) -> List[int]:
    """Strong TSP tour starting at node 0, deterministic given the seed"""
    distances = ceil_distance_matrix(instance.coord_array())
    tour = chained_two_opt(distances, np.random.default_rng(seed), kicks)
    return [int(x) for x in tour]
