import itertools

import numpy as np
import pytest

from shared.models.ranking import RankingSpec
from shared.models.results import NEG_INF, LexFitness, ScalarFitness
from shared.models.run_config import EvolveConfig
from shared.utils.errors import ConfigurationError
from ttp_evolver.fitness import (
    actual_ranking,
    aggregate,
    build_profile,
    compute_fitness,
    fitness_compare,
    fitness_explicit,
    fitness_no_order,
    fitness_pairwise,
    is_success,
    order_statistic_position,
)

PI = RankingSpec(pi=(3, 1, 2))


@pytest.mark.parametrize("row, expected", [
    ((10, 10, 1, 1, 10), 10.0),
    ((10, 1, 1, 10, 1), 1.0),
    ((7, 7, 7), 7.0),
])
def test_median_aggregation(row, expected):
    assert aggregate([row]).tolist() == [expected]


def test_even_k_uses_lower_middle():
    assert aggregate([[4.0, 1.0, 3.0, 2.0]]).tolist() == [2.0]


def test_quantile_position():
    assert order_statistic_position(5) == 2
    assert order_statistic_position(5, 0.0) == 0
    assert order_statistic_position(5, 1.0) == 4
    assert order_statistic_position(5, 0.3) == 1
    assert aggregate([[5.0, 1.0, 3.0, 2.0, 4.0]], quantile=0.75).tolist() == [4.0]


def test_build_profile_shape():
    profile = build_profile([[1.0, 3.0, 2.0], [5.0, 5.0, 5.0]], ["S2", "S4"])
    assert profile.medians == [2.0, 5.0]
    assert profile.k == 3


def test_explicit_worked_examples():
    assert fitness_explicit([13, 10, 8], PI) == LexFitness(g_count=1, f_b=-5.0, f_g=3.0)
    assert fitness_explicit([13, 10, 15], PI) == LexFitness(g_count=2, f_b=0.0, f_g=5.0)


def test_explicit_ordered_profile_has_empty_bad_set():
    assert fitness_explicit([3.0, 2.0, 1.0], RankingSpec(pi=(1, 2, 3))) == LexFitness(g_count=2, f_b=0.0, f_g=2.0)


def test_explicit_reversed_profile_has_no_good_pairs():
    fitness = fitness_explicit([1.0, 2.0, 3.0], RankingSpec(pi=(1, 2, 3)))
    assert fitness.g_count == 0
    assert fitness.f_g == NEG_INF
    assert fitness.f_b == -2.0


def test_explicit_ties_count_as_good():
    assert fitness_explicit([5.0, 5.0, 5.0], PI) == LexFitness(g_count=2, f_b=0.0, f_g=0.0)


@pytest.mark.parametrize("a, b, expected", [
    (LexFitness(g_count=2, f_b=0.0, f_g=5.0), LexFitness(g_count=1, f_b=-5.0, f_g=3.0), 1),
    (LexFitness(g_count=1, f_b=-5.0, f_g=3.0), LexFitness(g_count=1, f_b=-5.0, f_g=3.0), 0),
    (LexFitness(g_count=1, f_b=-2.0, f_g=100.0), LexFitness(g_count=2, f_b=-9.0, f_g=0.0), -1),
    (LexFitness(g_count=0, f_b=-2.0, f_g=NEG_INF), LexFitness(g_count=0, f_b=-2.0, f_g=-1e300), -1),
    (ScalarFitness(value=1.5), ScalarFitness(value=-3.0), 1),
])
def test_fitness_compare(a, b, expected):
    assert fitness_compare(a, b) == expected
    assert fitness_compare(b, a) == -expected


def test_compare_rejects_mixed_kinds():
    with pytest.raises(TypeError):
        fitness_compare(ScalarFitness(value=1.0), LexFitness(g_count=1, f_b=0.0, f_g=1.0))


def test_pairwise_difference_and_antisymmetry():
    medians = [13.0, 10.0, 8.0]
    assert fitness_pairwise(medians, 1, 3).value == 5.0
    assert fitness_pairwise([4.0, 4.0, 1.0], 1, 2).value == 0.0
    for i, j in itertools.permutations(range(1, 4), 2):
        assert fitness_pairwise(medians, i, j).value == -fitness_pairwise(medians, j, i).value


def test_pairwise_same_solver_rejected():
    with pytest.raises(ConfigurationError):
        fitness_pairwise([1.0, 2.0, 3.0], 2, 2)


def test_no_order_example_and_ties():
    assert fitness_no_order([8.0, 10.0, 13.0]).value == 6.0
    assert fitness_no_order([8.0, 8.0, 13.0]).value == 0.0
    assert fitness_no_order([13.0, 10.0, 13.0]).value == 0.0


def test_no_order_needs_three_solvers():
    with pytest.raises(ConfigurationError):
        fitness_no_order([1.0, 2.0])


@pytest.mark.parametrize("medians, expected", [
    ((13.0, 10.0, 8.0), (1, 2, 3)),
    ((8.0, 10.0, 13.0), (3, 2, 1)),
    ((4.0, 4.0, 4.0), (1, 2, 3)),
    ((1.0, 9.0, 9.0), (2, 3, 1)),
])
def test_actual_ranking(medians, expected):
    assert actual_ranking(medians) == expected


def test_fitness_properties_on_random_profiles():
    rng = np.random.default_rng(11)
    rankings = [RankingSpec(pi=pi) for pi in itertools.permutations((1, 2, 3))]
    for _ in range(10_000):
        medians = rng.integers(-50, 50, size=3).astype(float)
        shift = float(rng.integers(-1000, 1000))
        ranking = rankings[int(rng.integers(len(rankings)))]
        fitness = fitness_explicit(medians, ranking)

        assert fitness.f_b <= 0.0
        assert (fitness.f_b == 0.0) == (fitness.g_count == 2)
        assert fitness_explicit(medians + shift, ranking) == fitness

        no_order = fitness_no_order(medians).value
        assert no_order >= 0.0
        assert fitness_no_order(rng.permutation(medians)).value == no_order
        assert fitness_no_order(medians + shift).value == no_order
        assert fitness_pairwise(medians + shift, 1, 2) == fitness_pairwise(medians, 1, 2)

        realized = RankingSpec(pi=actual_ranking(medians))
        assert fitness_explicit(medians, realized).f_b == 0.0


def test_fully_satisfied_ranking_is_never_beaten_by_partial_one():
    rng = np.random.default_rng(12)
    for _ in range(2_000):
        satisfied = fitness_explicit(np.sort(rng.normal(size=3))[::-1], RankingSpec(pi=(1, 2, 3)))
        other = fitness_explicit(rng.normal(size=3), RankingSpec(pi=(1, 2, 3)))
        if other.g_count < 2:
            assert fitness_compare(other, satisfied) < 0


def test_compute_fitness_dispatch_and_success():
    explicit = EvolveConfig(fitness_kind="explicit", ranking="C2>S4>S2")
    pairwise = EvolveConfig(fitness_kind="pairwise", pair="C2>S2")
    no_order = EvolveConfig(fitness_kind="no-order")
    medians = [1.0, 2.0, 3.0]

    assert compute_fitness(medians, explicit) == LexFitness(g_count=2, f_b=0.0, f_g=2.0)
    assert compute_fitness(medians, pairwise) == ScalarFitness(value=2.0)
    assert compute_fitness(medians, no_order) == ScalarFitness(value=1.0)

    assert is_success((3, 2, 1), explicit) is True
    assert is_success((3, 1, 2), explicit) is False
    assert is_success((2, 3, 1), pairwise) is True
    assert is_success((1, 3, 2), pairwise) is False
    assert is_success((1, 2, 3), no_order) is None
