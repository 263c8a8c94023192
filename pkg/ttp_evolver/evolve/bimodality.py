"""
Bimodality Diagnostics - detects solvers whose runs split into two score clusters
"""
import numpy as np

from shared.models.results import BimodalityReport, PerformanceProfile, SolverDiagnostics
from shared.utils.errors import ConfigurationError
from ttp_evolver.fitness.aggregation import aggregate
from ttp_evolver.fitness.fitness_functions import actual_ranking


def gap_statistic(scores: np.ndarray) -> float:
    """Largest gap between consecutive sorted scores relative to their range"""
    ordered = np.sort(scores)
    spread = ordered[-1] - ordered[0]
    if spread == 0:
        return 0.0
    return float(np.max(np.diff(ordered)) / spread)


def bimodality_report(profile: PerformanceProfile, epsilon: float = 0.0) -> BimodalityReport:
    """Per-solver spread plus an overlap flag.

    The flag is set when the solver with the best median reaches no higher
    maximum than the solver with the worst median (within epsilon) although
    the medians differ.
    """
    if profile.k < 2:
        raise ConfigurationError("Bimodality diagnostics need at least two runs per solver")

    scores = np.asarray(profile.scores, dtype=float)
    medians = aggregate(scores)
    diagnostics = [
        SolverDiagnostics(
            solver=solver,
            minimum=float(row.min()),
            maximum=float(row.max()),
            median=float(median),
            iqr=float(np.percentile(row, 75) - np.percentile(row, 25)),
            gap_statistic=gap_statistic(row),
        )
        for solver, row, median in zip(profile.solvers, scores, medians)
    ]

    order = actual_ranking(medians)
    best, worst = order[0] - 1, order[-1] - 1
    overlap = bool(
        medians[best] > medians[worst]
        and scores[worst].max() >= scores[best].max() - epsilon
    )
    return BimodalityReport(
        solvers=diagnostics,
        best_solver=profile.solvers[best],
        worst_solver=profile.solvers[worst],
        overlap_flag=overlap,
        epsilon=epsilon,
    )
