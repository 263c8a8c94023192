"""Instance evolving package"""
from ttp_evolver.evolve.evaluator import evaluate_profile, run_seed
from ttp_evolver.evolve.evolver import InstanceEvolver, evolve, initial_generation
from ttp_evolver.evolve.batch import (
    BatchReport,
    batch_evolve,
    build_job_matrix,
    run_batch,
    targets_for
)
from ttp_evolver.evolve.bimodality import bimodality_report, gap_statistic

__all__ = [
    'evaluate_profile',
    'run_seed',
    'InstanceEvolver',
    'evolve',
    'initial_generation',
    'BatchReport',
    'batch_evolve',
    'build_job_matrix',
    'run_batch',
    'targets_for',
    'bimodality_report',
    'gap_statistic'
]
