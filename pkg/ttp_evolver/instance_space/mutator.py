"""
Instance Mutator - mutates every component of a TTP instance in one step
"""
from typing import Tuple

import numpy as np

from shared.config.constants import RENT_MUTATION_SIGMA, MutationOperator
from shared.models.run_config import GenerationConfig
from shared.models.ttp_models import TtpInstance
from shared.utils.logger import get_logger
from ttp_evolver.instance_space.generator import draw_capacity, repair
from ttp_evolver.instance_space.point_cloud import apply_mutation, draw_operator

logger = get_logger(__name__)

# Weight column has an open lower bound, profit column a closed one
ITEM_STRICT_LOW = (True, False)


def mutate_renting_rate(
    renting_rate: float,
    bounds: Tuple[float, float],
    rng: np.random.Generator
) -> float:
    """Gaussian step with sigma 10, out-of-bounds values redrawn uniformly"""
    return repair(renting_rate + rng.normal(0.0, RENT_MUTATION_SIGMA), bounds, rng)


def mutate_instance(instance: TtpInstance, config: GenerationConfig, seed: int) -> TtpInstance:
    """Mutated copy of an instance.

    Node and item clouds each get an independently drawn operator, the renting
    rate a Gaussian step and the capacity a fresh divisor. Node count, item
    count and the item-to-node assignment are preserved.

    Args:
        instance: Instance to mutate
        config: Generation bounds used for repair
        seed: Seed of this mutation

    Returns:
        New valid instance
    """
    rng = np.random.default_rng(seed)

    node_operator = draw_operator(rng)
    coords = apply_mutation(
        instance.coord_array(),
        node_operator,
        (config.coord_bounds, config.coord_bounds),
        rng,
    )

    item_operator = draw_operator(rng)
    items = apply_mutation(
        instance.item_cloud(),
        item_operator,
        (config.weight_bounds, config.profit_bounds),
        rng,
        strict_low=ITEM_STRICT_LOW,
    )
    weights, profits = items[:, 0], items[:, 1]
    if config.integer_items:
        weights = np.maximum(np.rint(weights), 1.0)
        profits = np.rint(profits)

    renting_rate = mutate_renting_rate(instance.renting_rate, config.rent_bounds, rng)
    capacity = draw_capacity(weights, config.capacity_divisor_range, rng)

    logger.debug(
        f"Mutation seed={seed}: nodes {MutationOperator(node_operator).value}, "
        f"items {MutationOperator(item_operator).value}"
    )
    return TtpInstance(
        name=instance.name,
        data_type=instance.data_type,
        coords=[(float(x), float(y)) for x, y in coords],
        profits=profits.tolist(),
        weights=weights.tolist(),
        availability=list(instance.availability),
        capacity=capacity,
        renting_rate=renting_rate,
        v_min=instance.v_min,
        v_max=instance.v_max,
    )
