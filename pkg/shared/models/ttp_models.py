"""
TTP data model - instances, solutions and solver budgets

Node and item indices are 0-based; node 0 is the start city (node 1 in the
benchmark file format).
"""
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from shared.config.constants import (
    COORD_BOUNDS,
    DEFAULT_ALPHA_PROBES,
    DEFAULT_KICKS,
    DEFAULT_MAX_PASSES,
    DEFAULT_V_MAX,
    DEFAULT_V_MIN,
)


class TtpInstance(BaseModel):
    """Traveling Thief Problem instance"""
    model_config = ConfigDict(frozen=True)

    name: str = "ttp"
    data_type: str = "uncorrelated"

    # Node coordinates, node 0 is the start city
    coords: List[Tuple[float, float]]

    # Items as parallel vectors; availability holds the 0-based node index
    profits: List[float]
    weights: List[float]
    availability: List[int]

    capacity: float
    renting_rate: float
    v_min: float = DEFAULT_V_MIN
    v_max: float = DEFAULT_V_MAX

    @model_validator(mode="after")
    def _check_invariants(self) -> "TtpInstance":
        n = len(self.coords)
        m = len(self.profits)
        if n < 3:
            raise ValueError(f"Instance needs at least 3 nodes, got {n}")
        if len(self.weights) != m or len(self.availability) != m:
            raise ValueError("profits, weights and availability must have equal length")
        if m < 1:
            raise ValueError("Instance needs at least one item")
        low, high = COORD_BOUNDS
        for x, y in self.coords:
            if not (low <= x <= high and low <= y <= high):
                raise ValueError(f"Coordinate ({x}, {y}) outside [{low}, {high}]^2")
        for node in self.availability:
            if not 1 <= node < n:
                raise ValueError(f"Item availability node {node} must lie in 1..{n - 1}")
        if any(w <= 0 for w in self.weights):
            raise ValueError("Item weights must be positive")
        if any(p < 0 for p in self.profits):
            raise ValueError("Item profits must be non-negative")
        # W <= sum(w) is enforced by generation, mutation and the file reader
        if self.capacity <= 0:
            raise ValueError(f"Capacity {self.capacity} must be positive")
        if self.renting_rate < 0:
            raise ValueError("Renting rate must be non-negative")
        if not 0 < self.v_min < self.v_max:
            raise ValueError("Speeds must satisfy 0 < v_min < v_max")
        return self

    @property
    def n_nodes(self) -> int:
        return len(self.coords)

    @property
    def n_items(self) -> int:
        return len(self.profits)

    @property
    def items(self) -> List[Tuple[float, float, int]]:
        """Items as (profit, weight, node) triples"""
        return list(zip(self.profits, self.weights, self.availability))

    @property
    def items_per_node(self) -> float:
        return self.n_items / (self.n_nodes - 1)

    def coord_array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=float)

    def item_cloud(self) -> np.ndarray:
        """Items as a (weight, profit) point cloud"""
        return np.column_stack([
            np.asarray(self.weights, dtype=float),
            np.asarray(self.profits, dtype=float),
        ])


class TtpSolution(BaseModel):
    """Tour plus packing plan with its cached objective"""
    model_config = ConfigDict(frozen=True)

    tour: List[int]
    packing: List[int]
    objective: float
    solver: Optional[str] = None

    @model_validator(mode="after")
    def _check_tour(self) -> "TtpSolution":
        if not self.tour or self.tour[0] != 0:
            raise ValueError("Tour must start at node 0")
        if sorted(self.tour) != list(range(len(self.tour))):
            raise ValueError("Tour must be a permutation of all nodes")
        if any(z not in (0, 1) for z in self.packing):
            raise ValueError("Packing must be binary")
        return self


class SolverBudget(BaseModel):
    """Termination budget of a single solver run"""
    max_passes: int = Field(default=DEFAULT_MAX_PASSES, ge=1)
    wall_time_limit: Optional[float] = Field(default=None, gt=0)
    rng_seed: int = Field(default=0, ge=0)
    kicks: int = Field(default=DEFAULT_KICKS, ge=0)
    alpha_probes: int = Field(default=DEFAULT_ALPHA_PROBES, ge=2)

    def with_seed(self, seed: int) -> "SolverBudget":
        return self.model_copy(update={"rng_seed": seed})
