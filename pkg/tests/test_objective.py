import numpy as np
import pytest

from shared.models.ttp_models import TtpInstance
from shared.utils.errors import InfeasiblePackingError
from ttp_engine.core.objective import (
    ObjectiveEvaluator,
    canonical_tour,
    distance,
    evaluate_objective,
    total_profit,
    total_weight,
)
from tests.oracles import random_small_instance, straight_line_objective


def _two_points(a, b) -> TtpInstance:
    return TtpInstance(
        coords=[a, b, (50.0, 50.0)],
        profits=[1.0],
        weights=[1.0],
        availability=[1],
        capacity=1.0,
        renting_rate=1.0,
    )


@pytest.mark.parametrize("a, b, expected", [
    ((0.0, 0.0), (3.0, 0.0), 3.0),
    ((0.0, 0.0), (0.0, 0.0), 0.0),
    ((0.0, 0.0), (1.0, 1.0), 2.0),
])
def test_distance_is_ceiled_euclidean(a, b, expected):
    instance = _two_points(a, b)
    assert distance(instance, 0, 1) == expected
    assert distance(instance, 1, 0) == expected


def test_objective_hand_example(triangle_instance):
    assert evaluate_objective(triangle_instance, [0, 1, 2], [1]) == pytest.approx(74.5, rel=1e-12)


def test_empty_knapsack_travels_at_max_speed(triangle_instance):
    assert evaluate_objective(triangle_instance, [0, 1, 2], [0]) == pytest.approx(-12.0, rel=1e-12)


def test_zero_rent_and_empty_packing_gives_zero(small_instance):
    free = small_instance.model_copy(update={"renting_rate": 0.0})
    tour = list(range(free.n_nodes))
    assert evaluate_objective(free, tour, [0] * free.n_items) == 0.0


def test_profit_and_weight_totals():
    assert (total_profit([0, 0], [10, 5]), total_weight([0, 0], [2, 3])) == (0.0, 0.0)
    assert (total_profit([1, 1], [10, 5]), total_weight([1, 1], [2, 3])) == (15.0, 5.0)
    assert (total_profit([0, 1], [10, 5]), total_weight([0, 1], [2, 3])) == (5.0, 3.0)


def test_infeasible_packing_raises(small_instance):
    tour = list(range(small_instance.n_nodes))
    with pytest.raises(InfeasiblePackingError):
        evaluate_objective(small_instance, tour, [1] * small_instance.n_items)


def test_invalid_tour_rejected(triangle_instance):
    with pytest.raises(ValueError):
        evaluate_objective(triangle_instance, [1, 0, 2], [0])


def test_rotation_to_start_node_keeps_objective(small_instance):
    rng = np.random.default_rng(3)
    tour = np.concatenate([[0], rng.permutation(np.arange(1, small_instance.n_nodes))])
    rotated = np.roll(tour, 4)
    evaluator = ObjectiveEvaluator(small_instance)
    packing = np.zeros(small_instance.n_items)
    packing[:3] = 1.0
    assert np.array_equal(canonical_tour(rotated), tour)
    assert evaluator.objective(canonical_tour(rotated), packing) == evaluator.objective(tour, packing)


def test_objective_decreases_with_rent(small_instance):
    tour = list(range(small_instance.n_nodes))
    packing = [1] + [0] * (small_instance.n_items - 1)
    values = [
        evaluate_objective(small_instance.model_copy(update={"renting_rate": rate}), tour, packing)
        for rate in (0.0, 1.0, 10.0, 100.0)
    ]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_empty_knapsack_time_is_length_over_max_speed(small_instance):
    evaluator = ObjectiveEvaluator(small_instance)
    tour = np.arange(small_instance.n_nodes)
    empty = np.zeros(small_instance.n_items)
    assert evaluator.travel_time(tour, empty) == pytest.approx(
        evaluator.tour_length(tour) / small_instance.v_max, rel=1e-12
    )


def test_decomposition_into_profit_and_travel_time(small_instance):
    evaluator = ObjectiveEvaluator(small_instance)
    tour = np.arange(small_instance.n_nodes)
    packing = np.zeros(small_instance.n_items)
    packing[::4] = 1.0
    expected = evaluator.packing_profit(packing) - small_instance.renting_rate * evaluator.travel_time(tour, packing)
    assert evaluator.objective(tour, packing) == expected


def test_agrees_with_straight_line_oracle():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        instance = random_small_instance(rng)
        tour = [0, *(rng.permutation(np.arange(1, instance.n_nodes)).tolist())]
        packing = (rng.random(instance.n_items) < 0.5).astype(int)
        if np.dot(packing, instance.weights) > instance.capacity:
            packing[:] = 0
        expected = straight_line_objective(instance, tour, packing.tolist())
        actual = evaluate_objective(instance, tour, packing.tolist())
        assert actual == pytest.approx(expected, rel=1e-12, abs=1e-9)


def test_batch_objective_matches_single(small_instance):
    evaluator = ObjectiveEvaluator(small_instance)
    rng = np.random.default_rng(8)
    tours = np.array([
        np.concatenate([[0], rng.permutation(np.arange(1, small_instance.n_nodes))]) for _ in range(5)
    ])
    packing = np.zeros(small_instance.n_items)
    packing[1] = 1.0
    batch = evaluator.batch_objective(tours, packing)
    singles = [evaluator.objective(tour, packing) for tour in tours]
    assert batch == pytest.approx(singles, rel=1e-12)
