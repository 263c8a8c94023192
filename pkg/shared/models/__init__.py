"""Shared models package"""
from shared.models.ttp_models import (
    TtpInstance,
    TtpSolution,
    SolverBudget
)
from shared.models.ranking import (
    RankingSpec,
    PairSpec
)
from shared.models.run_config import (
    GenerationConfig,
    EvolveConfig,
    BatchConfig
)
from shared.models.results import (
    PerformanceProfile,
    ScalarFitness,
    LexFitness,
    FitnessValue,
    TrajectoryRow,
    EvolveResult,
    JobFailure,
    SolverDiagnostics,
    BimodalityReport,
    FeatureVector,
    RunRecord,
    NEG_INF
)

__all__ = [
    'TtpInstance',
    'TtpSolution',
    'SolverBudget',
    'RankingSpec',
    'PairSpec',
    'GenerationConfig',
    'EvolveConfig',
    'BatchConfig',
    'PerformanceProfile',
    'ScalarFitness',
    'LexFitness',
    'FitnessValue',
    'TrajectoryRow',
    'EvolveResult',
    'JobFailure',
    'SolverDiagnostics',
    'BimodalityReport',
    'FeatureVector',
    'RunRecord',
    'NEG_INF'
]
