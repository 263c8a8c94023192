"""
Performance Aggregation - per-solver summary of repeated solver runs
"""
import math
from typing import Optional, Sequence

import numpy as np

from shared.models.results import PerformanceProfile


def order_statistic_position(k: int, quantile: Optional[float] = None) -> int:
    """0-based sorted position used as the aggregate of k runs.

    None selects the median: the middle element for odd k, the lower-middle
    one for even k. A quantile q selects position floor(q * (k - 1)).
    """
    if k < 1:
        raise ValueError("Aggregation needs at least one run")
    if quantile is None:
        return (k - 1) // 2
    return int(math.floor(quantile * (k - 1)))


def aggregate(scores: Sequence[Sequence[float]], quantile: Optional[float] = None) -> np.ndarray:
    """Per-row aggregate of an N x k score matrix; always an achieved score"""
    matrix = np.asarray(scores, dtype=float)
    if matrix.ndim != 2:
        raise ValueError("Scores must form an N x k matrix")
    position = order_statistic_position(matrix.shape[1], quantile)
    return np.sort(matrix, axis=1)[:, position]


def build_profile(
    scores: Sequence[Sequence[float]],
    solvers: Sequence[str],
    quantile: Optional[float] = None
) -> PerformanceProfile:
    matrix = np.asarray(scores, dtype=float)
    return PerformanceProfile(
        solvers=list(solvers),
        scores=matrix.tolist(),
        medians=aggregate(matrix, quantile).tolist(),
    )
