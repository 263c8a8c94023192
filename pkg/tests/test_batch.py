import pandas as pd
import pytest

from shared.config.constants import FitnessKind
from shared.models.run_config import BatchConfig, EvolveConfig, GenerationConfig
from shared.models.ttp_models import SolverBudget
from ttp_evolver.evolve import batch as batch_module
from ttp_evolver.evolve import BatchReport, batch_evolve, build_job_matrix, run_batch, targets_for


@pytest.fixture
def quick_batch() -> BatchConfig:
    return BatchConfig(
        n_values=[6],
        ipn_values=[1],
        template=EvolveConfig(
            generation=GenerationConfig(n=6, ipn=1),
            k=1,
            final_runs=1,
            max_iterations=0,
            solver_budget=SolverBudget(kicks=2, alpha_probes=4),
        ),
        base_seed=7,
    )


def test_targets_per_kind():
    assert len(targets_for(FitnessKind.EXPLICIT)) == 6
    assert len(targets_for(FitnessKind.PAIRWISE)) == 6
    assert targets_for(FitnessKind.NO_ORDER) == [None]


def test_job_matrix_covers_every_target_once(quick_batch):
    jobs = build_job_matrix(quick_batch)
    assert len(jobs) == 13
    assert len({job.seed for job in jobs}) == 13
    assert len({job.job_id for job in jobs}) == 13
    assert sum(job.fitness_kind == FitnessKind.EXPLICIT for job in jobs) == 6
    assert all(job.generation.n == 6 and job.k == 1 for job in jobs)


def test_job_matrix_replicates_and_grows_with_sizes(quick_batch):
    batch = quick_batch.model_copy(update={
        "n_values": [6, 8], "ipn_values": [1, 3], "jobs_per_target": 2,
    })
    jobs = build_job_matrix(batch)
    assert len(jobs) == 2 * 2 * 13 * 2
    assert {(job.generation.n, job.generation.ipn) for job in jobs} == {(6, 1), (6, 3), (8, 1), (8, 3)}


def test_summary_counts_add_up(quick_batch):
    report = run_batch(quick_batch)
    assert report.n_jobs == 13
    assert not report.failures
    assert report.ranking_table()["instances"].sum() == len(report.results)
    successes = report.success_table()
    assert successes["jobs"].sum() == len(report.results)
    no_order = successes[successes["fitness_kind"] == "no-order"]
    assert no_order["success_rate"].isna().all()


def test_explicit_success_rates_cover_one_target_per_instance(quick_batch):
    report = run_batch(quick_batch.model_copy(update={"fitness_kinds": [FitnessKind.EXPLICIT]}))
    assert all(result.success == (result.actual_ranking == result.config.ranking.pi) for result in report.results)


def test_batch_is_deterministic(quick_batch):
    first = run_batch(quick_batch)
    second = run_batch(quick_batch)
    pd.testing.assert_frame_equal(first.success_table(), second.success_table())
    pd.testing.assert_frame_equal(first.ranking_table(), second.ranking_table())


def test_failing_job_is_recorded_not_raised(quick_batch, monkeypatch):
    jobs = build_job_matrix(quick_batch)[:3]
    real_evolve = batch_module.evolve

    def flaky_evolve(config):
        if config.job_id == jobs[1].job_id:
            raise RuntimeError("solver crashed")
        return real_evolve(config)

    monkeypatch.setattr(batch_module, "evolve", flaky_evolve)
    report = batch_evolve(jobs, parallelism=1)
    assert len(report.results) == 2
    assert len(report.failures) == 1
    assert report.failures[0].index == 1
    assert "solver crashed" in report.failures[0].error


def test_empty_report_tables():
    report = BatchReport()
    assert report.success_table().empty
    assert report.ranking_table().empty
