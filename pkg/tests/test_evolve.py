import numpy as np
import pytest

from shared.models.run_config import EvolveConfig, GenerationConfig
from shared.models.ttp_models import SolverBudget
from ttp_evolver.evolve import InstanceEvolver, evaluate_profile, evolve, initial_generation
from ttp_evolver.fitness import fitness_compare
from ttp_evolver.instance_space.generator import random_instance
from ttp_evolver.io.run_records import record_from_result, replay_record


def test_single_run_profile_medians_are_the_scores(small_instance, fast_budget):
    profile = evaluate_profile(small_instance, k=1, seed=3, budget=fast_budget)
    assert profile.k == 1
    assert profile.medians == [row[0] for row in profile.scores]
    assert profile.solvers == ["S2", "S4", "C2"]


def test_profile_is_deterministic(small_instance, fast_budget):
    first = evaluate_profile(small_instance, k=3, seed=8, budget=fast_budget)
    second = evaluate_profile(small_instance, k=3, seed=8, budget=fast_budget)
    assert first == second


def test_profile_is_independent_of_worker_count(small_instance, fast_budget):
    serial = evaluate_profile(small_instance, k=2, seed=4, budget=fast_budget, n_jobs=1)
    parallel = evaluate_profile(small_instance, k=2, seed=4, budget=fast_budget, n_jobs=2)
    assert serial == parallel


def test_profile_rejects_zero_runs(small_instance):
    with pytest.raises(ValueError):
        evaluate_profile(small_instance, k=0)


def test_zero_iterations_returns_seeded_random_instance(tiny_evolve_config):
    config = tiny_evolve_config.model_copy(update={"max_iterations": 0})
    result = evolve(config)
    assert result.instance == random_instance(initial_generation(config))
    assert result.iterations_completed == 0
    assert len(result.trajectory) == 1
    assert result.final_profile.k == config.final_runs


def test_trajectory_is_elitist(tiny_evolve_config):
    result = evolve(tiny_evolve_config)
    assert len(result.trajectory) == tiny_evolve_config.max_iterations + 1
    assert [row.iteration for row in result.trajectory] == list(range(tiny_evolve_config.max_iterations + 1))
    for previous, current in zip(result.trajectory, result.trajectory[1:]):
        assert fitness_compare(current.fitness, previous.fitness) >= 0


def test_success_means_final_medians_follow_target(tiny_evolve_config):
    result = evolve(tiny_evolve_config)
    medians = result.final_profile.medians
    ordered = [medians[i] for i in tiny_evolve_config.ranking.indices]
    assert result.success == (tuple(result.actual_ranking) == tiny_evolve_config.ranking.pi)
    if result.success:
        assert all(a >= b for a, b in zip(ordered, ordered[1:]))


def test_evolve_is_deterministic(tiny_evolve_config):
    first = evolve(tiny_evolve_config)
    second = evolve(tiny_evolve_config)
    assert first.instance == second.instance
    assert first.trajectory == second.trajectory
    assert first.final_profile == second.final_profile


def _retarget(config, **changes) -> EvolveConfig:
    return EvolveConfig.model_validate({**config.model_dump(), "ranking": None, "pair": None, **changes})


def test_pairwise_and_no_order_jobs(tiny_evolve_config):
    pairwise = evolve(_retarget(tiny_evolve_config, fitness_kind="pairwise", pair="C2>S2"))
    assert pairwise.success in (True, False)
    no_order = evolve(_retarget(tiny_evolve_config, fitness_kind="no-order"))
    assert no_order.success is None
    assert all(row.fitness.value >= 0.0 for row in no_order.trajectory)


def test_wall_time_limit_stops_before_next_iteration(tiny_evolve_config):
    config = tiny_evolve_config.model_copy(update={"wall_time_limit": 1e-9, "max_iterations": 50})
    result = evolve(config)
    assert result.stopped_by_time
    assert result.iterations_completed == 0
    assert len(result.trajectory) == 1


def test_incumbent_reevaluation_keeps_every_iteration(tiny_evolve_config):
    config = tiny_evolve_config.model_copy(update={"reevaluate_incumbent": True, "k": 2})
    result = InstanceEvolver(config).run()
    assert len(result.trajectory) == config.max_iterations + 1
    assert result.trajectory[0].accepted


def test_quantile_aggregation_does_not_touch_final_profile(tiny_evolve_config):
    config = tiny_evolve_config.model_copy(update={"aggregation_quantile": 1.0, "max_iterations": 0})
    result = evolve(config)
    scores = np.asarray(result.final_profile.scores)
    assert result.final_profile.medians == np.sort(scores, axis=1)[:, (scores.shape[1] - 1) // 2].tolist()


@pytest.mark.slow
def test_long_runs_are_elitist_and_replayable():
    budget = SolverBudget(kicks=5, alpha_probes=10)
    for seed in range(100):
        config = EvolveConfig(
            fitness_kind="explicit",
            ranking="C2>S4>S2",
            generation=GenerationConfig(n=50, ipn=1),
            max_iterations=200,
            seed=seed,
            solver_budget=budget,
        )
        result = evolve(config)
        for previous, current in zip(result.trajectory, result.trajectory[1:]):
            assert fitness_compare(current.fitness, previous.fitness) >= 0
        replayed = replay_record(record_from_result(result))
        assert replayed.instance == result.instance
        assert replayed.trajectory == result.trajectory
