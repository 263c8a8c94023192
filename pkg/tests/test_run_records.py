import math

import pytest

from shared.config.constants import RUN_RECORD_SCHEMA_VERSION
from shared.models.results import NEG_INF, LexFitness, TrajectoryRow
from ttp_evolver.evolve import evolve
from ttp_evolver.io import append_record, merge_record_files, read_records, record_from_result, replay_record
from ttp_evolver.io.run_records import record_from_line, record_to_line


@pytest.fixture
def evolved(tiny_evolve_config):
    return evolve(tiny_evolve_config)


def test_record_captures_job(evolved, tiny_evolve_config):
    record = record_from_result(evolved, instance_path="out/instance.ttp")
    assert record.schema_version == RUN_RECORD_SCHEMA_VERSION
    assert record.seed == tiny_evolve_config.seed
    assert record.final_medians == evolved.final_profile.medians
    assert record.instance_path == "out/instance.ttp"
    assert record.iterations_completed == tiny_evolve_config.max_iterations


def test_line_round_trip_keeps_negative_infinity(evolved):
    record = record_from_result(evolved)
    row = TrajectoryRow(
        iteration=99,
        fitness=LexFitness(g_count=0, f_b=-4.0, f_g=NEG_INF),
        medians=[1.0, 2.0, 3.0],
        accepted=False,
    )
    record = record.model_copy(update={"trajectory": [*record.trajectory, row]})
    line = record_to_line(record)
    assert "\n" not in line
    restored = record_from_line(line)
    assert restored == record
    assert math.isinf(restored.trajectory[-1].fitness.f_g)


def test_append_and_merge(tmp_path, evolved):
    record = record_from_result(evolved)
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    append_record(record, first)
    append_record(record, first)
    append_record(record.model_copy(update={"job_id": "other"}), second)

    merged = tmp_path / "merged" / "runs.jsonl"
    assert merge_record_files([first, second], merged) == 3
    records = read_records(merged)
    assert [r.job_id for r in records] == [record.job_id, record.job_id, "other"]


def test_replay_reproduces_the_run(evolved):
    replayed = replay_record(record_from_result(evolved))
    assert replayed.instance == evolved.instance
    assert replayed.trajectory == evolved.trajectory
    assert replayed.final_profile == evolved.final_profile
    assert replayed.actual_ranking == evolved.actual_ranking
