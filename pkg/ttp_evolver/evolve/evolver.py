"""
Instance Evolver - elitist (1+1) EA over TTP instances

Each iteration mutates the incumbent, evaluates the solver portfolio on the
mutant and accepts it when its fitness is at least the incumbent's. The
incumbent's fitness is cached unless re-evaluation is switched on. The
success flag comes only from an independent final evaluation.
"""
import time
from typing import List, Optional, Tuple

from shared.config.constants import (
    PORTFOLIO,
    STREAM_EVALUATION,
    STREAM_FINAL,
    STREAM_MUTATION,
    STREAM_REEVALUATION,
)
from shared.models.results import EvolveResult, FitnessValue, PerformanceProfile, TrajectoryRow
from shared.models.run_config import EvolveConfig, GenerationConfig
from shared.models.ttp_models import TtpInstance
from shared.utils.logger import get_logger
from shared.utils.seeding import derive_seed
from ttp_evolver.evolve.evaluator import evaluate_profile
from ttp_evolver.fitness.fitness_functions import (
    actual_ranking,
    compute_fitness,
    fitness_compare,
    is_success,
)
from ttp_evolver.instance_space.generator import random_instance
from ttp_evolver.instance_space.mutator import mutate_instance

logger = get_logger(__name__, "ttp_evolver.log")


def initial_generation(config: EvolveConfig) -> GenerationConfig:
    """Generation config of the starting instance, seeded with the job seed"""
    return config.generation.model_copy(update={"seed": config.seed})


class InstanceEvolver:
    """Runs one evolving job"""

    def __init__(self, config: EvolveConfig):
        self.config = config
        self.generation = initial_generation(config)

    def evaluate(self, instance: TtpInstance, seed: int, runs: Optional[int] = None,
                 final: bool = False) -> PerformanceProfile:
        config = self.config
        return evaluate_profile(
            instance,
            PORTFOLIO,
            k=runs or config.k,
            seed=seed,
            budget=config.solver_budget,
            n_jobs=config.n_jobs,
            quantile=None if final else config.aggregation_quantile,
        )

    def score(self, instance: TtpInstance, seed: int) -> Tuple[FitnessValue, List[float]]:
        profile = self.evaluate(instance, seed)
        return compute_fitness(profile.medians, self.config), profile.medians

    def run(self) -> EvolveResult:
        config = self.config
        started = time.perf_counter()
        label = config.job_id or config.target_label
        logger.info(
            f"Evolving job {label}: {config.fitness_kind.value}, n={self.generation.n}, "
            f"ipn={self.generation.ipn}, seed={config.seed}"
        )

        incumbent = random_instance(self.generation)
        fitness, medians = self.score(incumbent, derive_seed(config.seed, STREAM_EVALUATION, 0))
        trajectory = [TrajectoryRow(iteration=0, fitness=fitness, medians=medians, accepted=True)]

        completed = 0
        stopped_by_time = False
        for iteration in range(1, config.max_iterations + 1):
            if config.wall_time_limit is not None and time.perf_counter() - started >= config.wall_time_limit:
                stopped_by_time = True
                break

            mutant = mutate_instance(
                incumbent, self.generation, derive_seed(config.seed, STREAM_MUTATION, iteration)
            )
            mutant_fitness, mutant_medians = self.score(
                mutant, derive_seed(config.seed, STREAM_EVALUATION, iteration)
            )
            if config.reevaluate_incumbent:
                fitness, medians = self.score(
                    incumbent, derive_seed(config.seed, STREAM_REEVALUATION, iteration)
                )

            accepted = fitness_compare(mutant_fitness, fitness) >= 0
            if accepted:
                incumbent, fitness, medians = mutant, mutant_fitness, mutant_medians
                logger.debug(f"Job {label} iteration {iteration}: accepted {fitness.as_tuple()}")

            trajectory.append(
                TrajectoryRow(iteration=iteration, fitness=fitness, medians=medians, accepted=accepted)
            )
            completed = iteration

        final_profile = self.evaluate(
            incumbent, derive_seed(config.seed, STREAM_FINAL), runs=config.final_runs, final=True
        )
        ranking = actual_ranking(final_profile.medians)
        success = is_success(ranking, config)
        wall_time = time.perf_counter() - started

        logger.info(
            f"Job {label} finished after {completed} iterations in {wall_time:.1f}s: "
            f"actual ranking {ranking}, success={success}"
        )
        return EvolveResult(
            config=config,
            instance=incumbent,
            trajectory=trajectory,
            final_profile=final_profile,
            actual_ranking=ranking,
            success=success,
            iterations_completed=completed,
            stopped_by_time=stopped_by_time,
            wall_time=wall_time,
        )


def evolve(config: EvolveConfig) -> EvolveResult:
    """Evolve one instance towards the configured ranking"""
    return InstanceEvolver(config).run()
