"""Shared fixtures"""
import pytest

from shared.models.run_config import EvolveConfig, GenerationConfig
from shared.models.ttp_models import SolverBudget, TtpInstance
from ttp_evolver.instance_space.generator import random_instance


@pytest.fixture
def triangle_instance() -> TtpInstance:
    """3 nodes at (0,0), (3,0), (0,4); one item (p=100, w=2) at the second node"""
    return TtpInstance(
        name="triangle",
        coords=[(0.0, 0.0), (3.0, 0.0), (0.0, 4.0)],
        profits=[100.0],
        weights=[2.0],
        availability=[1],
        capacity=3.0,
        renting_rate=1.0,
    )


@pytest.fixture
def small_instance() -> TtpInstance:
    return random_instance(GenerationConfig(n=12, ipn=3, seed=11))


@pytest.fixture
def fast_budget() -> SolverBudget:
    return SolverBudget(kicks=3, alpha_probes=6)


@pytest.fixture
def tiny_evolve_config(fast_budget: SolverBudget) -> EvolveConfig:
    return EvolveConfig(
        fitness_kind="explicit",
        ranking="C2>S4>S2",
        generation=GenerationConfig(n=8, ipn=1),
        k=1,
        final_runs=3,
        max_iterations=4,
        seed=5,
        solver_budget=fast_budget,
    )
