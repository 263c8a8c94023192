"""
TTP Evolver Project Constants
"""
from enum import Enum


class SolverId(str, Enum):
    """Heuristic solvers of the portfolio, in portfolio order"""
    S2 = "S2"
    S4 = "S4"
    C2 = "C2"

    @property
    def index(self) -> int:
        """1-based position in the portfolio (S2=1, S4=2, C2=3)"""
        return PORTFOLIO.index(self) + 1

    @classmethod
    def from_index(cls, index: int) -> "SolverId":
        return PORTFOLIO[index - 1]


PORTFOLIO = (SolverId.S2, SolverId.S4, SolverId.C2)


class FitnessKind(str, Enum):
    """Fitness function approaches"""
    PAIRWISE = "pairwise"
    NO_ORDER = "no-order"
    EXPLICIT = "explicit"


class MutationOperator(str, Enum):
    """Point-cloud mutation operators, drawn uniformly per EA iteration"""
    EXPLOSION = "explosion"
    IMPLOSION = "implosion"
    CLUSTER = "cluster"
    COMPRESSION = "compression"
    EXPANSION = "expansion"
    GRID = "grid"
    LINEAR_PROJECTION = "linear-projection"
    ROTATION = "rotation"
    UNIFORM_REPOSITION = "uniform-reposition"
    NORMAL_PERTURBATION = "normal-perturbation"


# Operators that only touch points inside a sampled disc around a center
REGION_OPERATORS = frozenset({
    MutationOperator.EXPLOSION,
    MutationOperator.IMPLOSION,
    MutationOperator.CLUSTER,
    MutationOperator.COMPRESSION,
    MutationOperator.EXPANSION,
    MutationOperator.GRID,
    MutationOperator.LINEAR_PROJECTION,
    MutationOperator.ROTATION,
})


# Instance space bounds
COORD_BOUNDS = (0.0, 10000.0)
WEIGHT_BOUNDS = (0.0, 4040.0)  # weights repaired into (0, 4040]
PROFIT_BOUNDS = (0.0, 4400.0)
RENT_BOUNDS = (0.0, 1000.0)
CAPACITY_DIVISOR_RANGE = (1, 10)
CAPACITY_DIVISOR_BASE = 11
ALLOWED_IPN = (1, 3, 5, 10)
DEFAULT_V_MIN = 0.1
DEFAULT_V_MAX = 1.0
RENT_MUTATION_SIGMA = 10.0

# Mutation operator parameters
RADIUS_FRACTION_RANGE = (0.05, 0.3)  # of the smaller bounds extent
GRID_CELLS_RANGE = (2, 10)
NORMAL_SIGMA_FRACTION = 0.025  # of the bounds extent
SUBSET_FRACTION_RANGE = (0.05, 0.3)
IMPLOSION_FACTOR_RANGE = (0.1, 0.5)
COMPRESSION_FACTOR_RANGE = (0.05, 0.5)
EXPANSION_FACTOR_RANGE = (1.5, 3.0)

# Solver defaults
DEFAULT_MAX_PASSES = 1000
DEFAULT_KICKS = 20
DEFAULT_ALPHA_PROBES = 20
ALPHA_RANGE = (0.0, 10.0)

# Evolution defaults (desk-scale profile)
DEFAULT_RUNS_PER_SOLVER = 5
DEFAULT_FINAL_RUNS = 30
DEFAULT_MAX_ITERATIONS = 500
DEFAULT_EVOLVE_N = 50
DEFAULT_EVOLVE_IPN = 1

# Seed streams for positional seed derivation
STREAM_MUTATION = 1
STREAM_EVALUATION = 2
STREAM_FINAL = 3
STREAM_REEVALUATION = 4
STREAM_SOLVER_RUN = 5

# Features
KNN_SIZES = (3, 5, 7)
FEATURE_SENTINEL = -1.0

# Run records
RUN_RECORD_SCHEMA_VERSION = 1
ENV_OUTPUT_DIR = "TTP_EVOLVER_OUTPUT_DIR"
ENV_LOG_DIR = "TTP_EVOLVER_LOG_DIR"
ENV_LOG_LEVEL = "TTP_EVOLVER_LOG_LEVEL"

# Relative margin a candidate must beat the incumbent by to count as an improvement
IMPROVEMENT_TOLERANCE = 1e-12
