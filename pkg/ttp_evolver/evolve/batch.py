"""
Batch Runner - job matrix construction, parallel evolving jobs and success summaries
"""
from itertools import permutations
from typing import List, Optional, Sequence, Union

import pandas as pd
from joblib import Parallel, delayed
from pydantic import BaseModel, Field

from shared.config.constants import PORTFOLIO, FitnessKind
from shared.models.ranking import PairSpec, RankingSpec
from shared.models.results import EvolveResult, JobFailure
from shared.models.run_config import BatchConfig, EvolveConfig
from shared.utils.logger import get_logger
from shared.utils.seeding import derive_seed
from ttp_evolver.evolve.evolver import evolve

logger = get_logger(__name__, "ttp_evolver.log")

Target = Union[RankingSpec, PairSpec, None]


def targets_for(kind: FitnessKind, n_solvers: int = len(PORTFOLIO)) -> List[Target]:
    """All rankings, all ordered pairs, or a single untargeted slot"""
    indices = range(1, n_solvers + 1)
    if kind == FitnessKind.EXPLICIT:
        return [RankingSpec(pi=pi) for pi in permutations(indices)]
    if kind == FitnessKind.PAIRWISE:
        return [PairSpec(easy=a, hard=b) for a, b in permutations(indices, 2)]
    return [None]


def build_job_matrix(batch: BatchConfig) -> List[EvolveConfig]:
    """One config per (n, ipn, fitness kind, target, replicate), seeded by position"""
    template = batch.template.model_dump()
    jobs: List[EvolveConfig] = []

    for n in batch.n_values:
        for ipn in batch.ipn_values:
            generation = batch.template.generation.model_copy(update={"n": n, "ipn": ipn})
            for kind in batch.fitness_kinds:
                for target in targets_for(kind):
                    for replicate in range(batch.jobs_per_target):
                        index = len(jobs)
                        label = target.format() if target is not None else "none"
                        jobs.append(EvolveConfig.model_validate({
                            **template,
                            "fitness_kind": kind,
                            "ranking": target if kind == FitnessKind.EXPLICIT else None,
                            "pair": target if kind == FitnessKind.PAIRWISE else None,
                            "generation": generation,
                            "seed": derive_seed(batch.base_seed, index),
                            "job_id": f"{index:05d}-{kind.value}-n{n}-ipn{ipn}-{label}-{replicate}",
                        }))
    return jobs


def _run_job(index: int, config: EvolveConfig) -> Union[EvolveResult, JobFailure]:
    try:
        return evolve(config)
    except Exception as e:
        logger.error(f"Job {config.job_id or index} failed: {e}")
        return JobFailure(index=index, job_id=config.job_id, error=f"{type(e).__name__}: {e}")


class BatchReport(BaseModel):
    """Completed results and failures of a batch, in job order"""
    results: List[EvolveResult] = Field(default_factory=list)
    failures: List[JobFailure] = Field(default_factory=list)

    @property
    def n_jobs(self) -> int:
        return len(self.results) + len(self.failures)

    def job_frame(self) -> pd.DataFrame:
        """One row per completed job"""
        rows = [
            {
                "job_id": result.config.job_id,
                "fitness_kind": result.config.fitness_kind.value,
                "n": result.config.generation.n,
                "ipn": result.config.generation.ipn,
                "target": result.config.target_label,
                "actual_ranking": RankingSpec(pi=result.actual_ranking).format(),
                "success": result.success,
                "iterations": result.iterations_completed,
                "wall_time": result.wall_time,
            }
            for result in self.results
        ]
        columns = ["job_id", "fitness_kind", "n", "ipn", "target", "actual_ranking",
                   "success", "iterations", "wall_time"]
        return pd.DataFrame(rows, columns=columns)

    def success_table(self) -> pd.DataFrame:
        """Success rate per target; untargeted jobs get NaN"""
        frame = self.job_frame()
        keys = ["fitness_kind", "n", "ipn", "target"]
        if frame.empty:
            return pd.DataFrame(columns=keys + ["jobs", "successes", "success_rate"])
        frame["success_value"] = frame["success"].map(
            lambda value: float("nan") if value is None else float(value)
        )
        table = frame.groupby(keys, sort=True).agg(
            jobs=("job_id", "size"),
            successes=("success_value", "sum"),
            success_rate=("success_value", "mean"),
        )
        return table.reset_index()

    def ranking_table(self) -> pd.DataFrame:
        """Number of evolved instances per actual ranking and fitness kind"""
        frame = self.job_frame()
        keys = ["fitness_kind", "n", "ipn", "actual_ranking"]
        if frame.empty:
            return pd.DataFrame(columns=keys + ["instances"])
        return frame.groupby(keys, sort=True).size().reset_index(name="instances")


def batch_evolve(configs: Sequence[EvolveConfig], parallelism: int = 1) -> BatchReport:
    """Run independent evolving jobs; a failing job is recorded, not raised"""
    logger.info(f"Running batch of {len(configs)} jobs with parallelism {parallelism}")
    outcomes = Parallel(n_jobs=parallelism)(
        delayed(_run_job)(index, config) for index, config in enumerate(configs)
    )

    report = BatchReport()
    for outcome in outcomes:
        if isinstance(outcome, JobFailure):
            report.failures.append(outcome)
        else:
            report.results.append(outcome)

    logger.info(f"Batch finished: {len(report.results)} completed, {len(report.failures)} failed")
    return report


def run_batch(batch: BatchConfig, parallelism: Optional[int] = None) -> BatchReport:
    jobs = build_job_matrix(batch)
    return batch_evolve(jobs, parallelism or batch.parallelism)
