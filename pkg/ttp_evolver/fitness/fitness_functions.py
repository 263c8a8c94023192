"""
Fitness Functions - pairwise, no-order and explicit-ranking fitness with a total order

Solver indices and rankings are 1-based, matching portfolio positions.
"""
from typing import Optional, Sequence, Tuple

import numpy as np

from shared.config.constants import FitnessKind
from shared.models.ranking import PairSpec, RankingSpec
from shared.models.results import NEG_INF, FitnessValue, LexFitness, ScalarFitness
from shared.models.run_config import EvolveConfig
from shared.utils.errors import ConfigurationError


def fitness_pairwise(medians: Sequence[float], easy: int, hard: int) -> ScalarFitness:
    """Performance difference p_easy - p_hard"""
    if easy == hard:
        raise ConfigurationError("Pairwise fitness needs two distinct solvers")
    return ScalarFitness(value=float(medians[easy - 1]) - float(medians[hard - 1]))


def fitness_no_order(medians: Sequence[float]) -> ScalarFitness:
    """Sum of products of adjacent gaps between sorted performances"""
    if len(medians) < 3:
        raise ConfigurationError("No-order fitness needs at least three solvers")
    gaps = np.diff(np.sort(np.asarray(medians, dtype=float)))
    return ScalarFitness(value=float(np.sum(gaps[:-1] * gaps[1:])))


def fitness_explicit(medians: Sequence[float], ranking: RankingSpec) -> LexFitness:
    """(|G|, f_B, f_G) over adjacent pairs of the desired ranking.

    A pair is good when p_pi(i) >= p_pi(i+1); ties count as good. f_B sums the
    (negative) differences of bad pairs, 0 without any; f_G sums the
    differences of good pairs, -inf without any.
    """
    if ranking.size != len(medians):
        raise ConfigurationError(
            f"Ranking over {ranking.size} solvers given {len(medians)} performances"
        )
    ordered = [float(medians[i]) for i in ranking.indices]
    differences = [ordered[i] - ordered[i + 1] for i in range(len(ordered) - 1)]
    good = [d for d in differences if d >= 0]
    bad = [d for d in differences if d < 0]
    return LexFitness(
        g_count=len(good),
        f_b=float(sum(bad)) if bad else 0.0,
        f_g=float(sum(good)) if good else NEG_INF,
    )


def fitness_compare(a: FitnessValue, b: FitnessValue) -> int:
    """-1, 0 or 1 as a is worse than, equal to or better than b"""
    if type(a) is not type(b):
        raise TypeError(f"Cannot compare {a.kind} fitness with {b.kind} fitness")
    left, right = a.as_tuple(), b.as_tuple()
    return (left > right) - (left < right)


def actual_ranking(medians: Sequence[float]) -> Tuple[int, ...]:
    """Solvers by descending performance, ties by ascending index"""
    return tuple(
        index + 1
        for index in sorted(range(len(medians)), key=lambda i: (-float(medians[i]), i))
    )


def compute_fitness(medians: Sequence[float], config: EvolveConfig) -> FitnessValue:
    """Fitness of a performance vector under the job's approach"""
    if config.fitness_kind == FitnessKind.PAIRWISE:
        pair: PairSpec = config.pair
        return fitness_pairwise(medians, pair.easy, pair.hard)
    if config.fitness_kind == FitnessKind.EXPLICIT:
        return fitness_explicit(medians, config.ranking)
    return fitness_no_order(medians)


def is_success(ranking: Sequence[int], config: EvolveConfig) -> Optional[bool]:
    """Whether an actual ranking realizes the job's target; None without a target"""
    ranking = tuple(ranking)
    if config.fitness_kind == FitnessKind.EXPLICIT:
        return ranking == config.ranking.pi
    if config.fitness_kind == FitnessKind.PAIRWISE:
        return ranking.index(config.pair.easy) < ranking.index(config.pair.hard)
    return None
