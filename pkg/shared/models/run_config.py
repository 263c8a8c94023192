"""
Run configuration models - instance generation, evolution jobs and batches
"""
from pathlib import Path
from typing import Any, List, Optional, Tuple, Type, TypeVar, Union

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from shared.config.constants import (
    ALLOWED_IPN,
    CAPACITY_DIVISOR_RANGE,
    COORD_BOUNDS,
    DEFAULT_EVOLVE_IPN,
    DEFAULT_EVOLVE_N,
    DEFAULT_FINAL_RUNS,
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_RUNS_PER_SOLVER,
    DEFAULT_V_MAX,
    DEFAULT_V_MIN,
    PORTFOLIO,
    PROFIT_BOUNDS,
    RENT_BOUNDS,
    WEIGHT_BOUNDS,
    FitnessKind,
)
from shared.models.ranking import PairSpec, RankingSpec
from shared.models.ttp_models import SolverBudget

ConfigT = TypeVar("ConfigT", bound="YamlConfig")

Bounds = Tuple[float, float]


class YamlConfig(BaseModel):
    """Config model persisted as YAML"""

    def save(self, path: Union[str, Path]) -> None:
        """Save configuration to file"""
        config_path = Path(path)
        config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(config_path, 'w') as f:
            yaml.dump(self.model_dump(mode="json"), f, default_flow_style=False, sort_keys=False)

    @classmethod
    def load(cls: Type[ConfigT], path: Union[str, Path]) -> ConfigT:
        """Load configuration from file"""
        config_path = Path(path)
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        with open(config_path, 'r') as f:
            data = yaml.safe_load(f) or {}
        return cls.model_validate(data)


class GenerationConfig(YamlConfig):
    """Random instance generation parameters"""
    n: int = Field(default=200, ge=3)
    ipn: int = 1
    coord_bounds: Bounds = COORD_BOUNDS
    weight_bounds: Bounds = WEIGHT_BOUNDS
    profit_bounds: Bounds = PROFIT_BOUNDS
    rent_bounds: Bounds = RENT_BOUNDS
    capacity_divisor_range: Tuple[int, int] = CAPACITY_DIVISOR_RANGE
    v_min: float = DEFAULT_V_MIN
    v_max: float = DEFAULT_V_MAX
    seed: int = Field(default=0, ge=0)

    # Sample integer weights/profits as the benchmark generator does
    integer_items: bool = False

    @field_validator("ipn")
    @classmethod
    def _check_ipn(cls, value: int) -> int:
        if value not in ALLOWED_IPN:
            raise ValueError(f"ipn must be one of {ALLOWED_IPN}")
        return value

    @model_validator(mode="after")
    def _check_bounds(self) -> "GenerationConfig":
        for label, (low, high) in (
            ("coord_bounds", self.coord_bounds),
            ("weight_bounds", self.weight_bounds),
            ("profit_bounds", self.profit_bounds),
            ("rent_bounds", self.rent_bounds),
        ):
            if not 0 <= low < high:
                raise ValueError(f"{label} must satisfy 0 <= low < high")
        if not (COORD_BOUNDS[0] <= self.coord_bounds[0] and self.coord_bounds[1] <= COORD_BOUNDS[1]):
            raise ValueError(f"coord_bounds must lie within {COORD_BOUNDS}")
        low_d, high_d = self.capacity_divisor_range
        if not 1 <= low_d <= high_d:
            raise ValueError("capacity_divisor_range must satisfy 1 <= low <= high")
        if not 0 < self.v_min < self.v_max:
            raise ValueError("Speeds must satisfy 0 < v_min < v_max")
        return self

    @property
    def n_items(self) -> int:
        return (self.n - 1) * self.ipn


def _default_evolve_generation() -> GenerationConfig:
    return GenerationConfig(n=DEFAULT_EVOLVE_N, ipn=DEFAULT_EVOLVE_IPN)


class EvolveConfig(YamlConfig):
    """One instance-evolving job"""
    fitness_kind: FitnessKind = FitnessKind.NO_ORDER
    ranking: Optional[RankingSpec] = None
    pair: Optional[PairSpec] = None

    generation: GenerationConfig = Field(default_factory=_default_evolve_generation)
    k: int = Field(default=DEFAULT_RUNS_PER_SOLVER, ge=1)
    final_runs: int = Field(default=DEFAULT_FINAL_RUNS, ge=1)
    max_iterations: int = Field(default=DEFAULT_MAX_ITERATIONS, ge=0)
    wall_time_limit: Optional[float] = Field(default=None, gt=0)
    seed: int = Field(default=0, ge=0)
    solver_budget: SolverBudget = Field(default_factory=SolverBudget)

    # Follow-up experiment knobs
    reevaluate_incumbent: bool = False
    aggregation_quantile: Optional[float] = Field(default=None, ge=0.0, le=1.0)

    # Parallel solver runs within one fitness evaluation
    n_jobs: int = 1
    job_id: Optional[str] = None

    @field_validator("ranking", mode="before")
    @classmethod
    def _parse_ranking(cls, value: Any) -> Any:
        if isinstance(value, str):
            return RankingSpec.parse(value)
        return value

    @field_validator("pair", mode="before")
    @classmethod
    def _parse_pair(cls, value: Any) -> Any:
        if isinstance(value, str):
            return PairSpec.parse(value)
        return value

    @model_validator(mode="after")
    def _check_targets(self) -> "EvolveConfig":
        explicit = self.fitness_kind == FitnessKind.EXPLICIT
        pairwise = self.fitness_kind == FitnessKind.PAIRWISE
        if explicit != (self.ranking is not None):
            raise ValueError("ranking must be given exactly when fitness_kind is explicit")
        if pairwise != (self.pair is not None):
            raise ValueError("pair must be given exactly when fitness_kind is pairwise")
        if self.ranking is not None and self.ranking.size != len(PORTFOLIO):
            raise ValueError(f"ranking must order all {len(PORTFOLIO)} solvers")
        if self.pair is not None and max(self.pair.easy, self.pair.hard) > len(PORTFOLIO):
            raise ValueError("pair references a solver outside the portfolio")
        return self

    @property
    def target_label(self) -> str:
        """Human readable desired ranking, e.g. 'C2>S4>S2'"""
        if self.ranking is not None:
            return self.ranking.format()
        if self.pair is not None:
            return self.pair.format()
        return "none"


def _default_template() -> EvolveConfig:
    return EvolveConfig()


class BatchConfig(YamlConfig):
    """Job matrix over n, IPN, fitness approach and target rankings"""
    n_values: List[int] = Field(default_factory=lambda: [DEFAULT_EVOLVE_N])
    ipn_values: List[int] = Field(default_factory=lambda: [DEFAULT_EVOLVE_IPN])
    fitness_kinds: List[FitnessKind] = Field(default_factory=lambda: list(FitnessKind))
    jobs_per_target: int = Field(default=1, ge=1)
    template: EvolveConfig = Field(default_factory=_default_template)
    parallelism: int = 1
    base_seed: int = Field(default=0, ge=0)

    @field_validator("ipn_values")
    @classmethod
    def _check_ipn_values(cls, values: List[int]) -> List[int]:
        for value in values:
            if value not in ALLOWED_IPN:
                raise ValueError(f"ipn values must be drawn from {ALLOWED_IPN}")
        return values
