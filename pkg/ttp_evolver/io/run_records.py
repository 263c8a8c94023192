"""
Run Records - newline-delimited JSON records of evolving jobs and their replay
"""
import json
from pathlib import Path
from typing import Iterable, List, Optional, Union

from shared.models.results import EvolveResult, RunRecord
from shared.utils.logger import get_logger
from ttp_evolver.evolve.evolver import evolve

logger = get_logger(__name__, "ttp_evolver.log")


def record_from_result(result: EvolveResult, instance_path: Optional[Union[str, Path]] = None) -> RunRecord:
    return RunRecord(
        job_id=result.config.job_id,
        config=result.config,
        seed=result.config.seed,
        trajectory=result.trajectory,
        final_scores=result.final_profile.scores,
        final_medians=result.final_profile.medians,
        actual_ranking=result.actual_ranking,
        success=result.success,
        iterations_completed=result.iterations_completed,
        stopped_by_time=result.stopped_by_time,
        wall_time=result.wall_time,
        instance_path=str(instance_path) if instance_path is not None else None,
    )


def record_to_line(record: RunRecord) -> str:
    """One JSON line; -inf fitness components are kept as -Infinity"""
    return json.dumps(record.model_dump(mode="python"), separators=(",", ":"))


def record_from_line(line: str) -> RunRecord:
    return RunRecord.model_validate(json.loads(line))


def append_record(record: RunRecord, path: Union[str, Path]) -> None:
    output = Path(path)
    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, 'a') as f:
        f.write(record_to_line(record) + "\n")


def read_records(path: Union[str, Path]) -> List[RunRecord]:
    with open(path, 'r') as f:
        return [record_from_line(line) for line in f if line.strip()]


def merge_record_files(paths: Iterable[Union[str, Path]], destination: Union[str, Path]) -> int:
    """Concatenate per-job record files in the given order; returns the record count"""
    output = Path(destination)
    output.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(output, 'w') as merged:
        for path in paths:
            for record in read_records(path):
                merged.write(record_to_line(record) + "\n")
                count += 1
    logger.info(f"Merged {count} run records into {output}")
    return count


def replay_record(record: RunRecord) -> EvolveResult:
    """Re-run a recorded job for exactly the iterations it completed"""
    config = record.config.model_copy(update={
        "seed": record.seed,
        "max_iterations": record.iterations_completed,
        "wall_time_limit": None,
    })
    return evolve(config)
