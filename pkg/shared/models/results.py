"""
Result models - performance profiles, fitness values, evolution results and run records
"""
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from shared.config.constants import RUN_RECORD_SCHEMA_VERSION
from shared.models.run_config import EvolveConfig
from shared.models.ttp_models import TtpInstance

# Sentinel for an empty set of good directions, below every finite value
NEG_INF = float("-inf")


class PerformanceProfile(BaseModel):
    """N solvers x k runs score matrix with per-solver aggregated performance"""
    solvers: List[str]
    scores: List[List[float]]
    medians: List[float]

    @model_validator(mode="after")
    def _check_shape(self) -> "PerformanceProfile":
        if len(self.scores) != len(self.solvers) or len(self.medians) != len(self.solvers):
            raise ValueError("scores, medians and solvers must have one entry per solver")
        lengths = {len(row) for row in self.scores}
        if len(lengths) != 1 or 0 in lengths:
            raise ValueError("every solver needs the same number k >= 1 of runs")
        return self

    @property
    def k(self) -> int:
        return len(self.scores[0])


class ScalarFitness(BaseModel):
    """Fitness of the pairwise and no-order approaches"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["scalar"] = "scalar"
    value: float

    def as_tuple(self) -> Tuple[float, ...]:
        return (self.value,)


class LexFitness(BaseModel):
    """Explicit-ranking fitness (|G|, f_B, f_G), compared lexicographically"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["lex"] = "lex"
    g_count: int
    f_b: float
    f_g: float

    def as_tuple(self) -> Tuple[float, ...]:
        return (float(self.g_count), self.f_b, self.f_g)


FitnessValue = Annotated[Union[ScalarFitness, LexFitness], Field(discriminator="kind")]


class TrajectoryRow(BaseModel):
    """Incumbent state after one EA iteration (iteration 0 is the initial instance)"""
    iteration: int
    fitness: FitnessValue
    medians: List[float]
    accepted: bool


class EvolveResult(BaseModel):
    """Outcome of one instance-evolving job"""
    config: EvolveConfig
    instance: TtpInstance
    trajectory: List[TrajectoryRow]
    final_profile: PerformanceProfile
    actual_ranking: Tuple[int, ...]
    success: Optional[bool]
    iterations_completed: int
    stopped_by_time: bool = False
    wall_time: float = 0.0


class JobFailure(BaseModel):
    """A batch job that raised instead of returning a result"""
    index: int
    job_id: Optional[str] = None
    error: str


class SolverDiagnostics(BaseModel):
    """Spread of one solver's scores across runs"""
    solver: str
    minimum: float
    maximum: float
    median: float
    iqr: float
    gap_statistic: float


class BimodalityReport(BaseModel):
    """Diagnostics for two-cluster score distributions"""
    solvers: List[SolverDiagnostics]
    best_solver: str
    worst_solver: str
    overlap_flag: bool
    epsilon: float = 0.0


class FeatureVector(BaseModel):
    """Named instance features with a fixed schema"""
    values: Dict[str, float]
    flagged: List[str] = Field(default_factory=list)


class RunRecord(BaseModel):
    """Self-describing record of one evolving job, sufficient to replay it"""
    schema_version: int = RUN_RECORD_SCHEMA_VERSION
    job_id: Optional[str] = None
    config: EvolveConfig
    seed: int
    trajectory: List[TrajectoryRow]
    final_scores: List[List[float]]
    final_medians: List[float]
    actual_ranking: Tuple[int, ...]
    success: Optional[bool]
    iterations_completed: int
    stopped_by_time: bool = False
    wall_time: float
    instance_path: Optional[str] = None
