"""
Random Instance Generator - uniform TTP instances and bounds repair
"""
import math
from typing import Sequence, Tuple, Union

import numpy as np

from shared.config.constants import CAPACITY_DIVISOR_BASE
from shared.models.run_config import GenerationConfig
from shared.models.ttp_models import TtpInstance
from shared.utils.logger import get_logger

logger = get_logger(__name__)

ArrayLike = Union[float, Sequence[float], np.ndarray]


def repair(
    values: ArrayLike,
    bounds: Union[Tuple[float, float], Sequence[Tuple[float, float]]],
    rng: np.random.Generator,
    strict_low: Union[bool, Sequence[bool]] = False
) -> Union[float, np.ndarray]:
    """Redraw every out-of-bounds entry uniformly within its bounds.

    bounds is one (low, high) pair for all entries or one pair per column of a
    point array. Columns with strict_low set treat the lower bound as open
    (item weights must stay positive). In-bounds entries are returned unchanged.
    """
    array = np.array(values, dtype=float)
    limits = np.asarray(bounds, dtype=float)
    lows = np.broadcast_to(limits[..., 0], array.shape)
    highs = np.broadcast_to(limits[..., 1], array.shape)
    strict = np.broadcast_to(np.asarray(strict_low, dtype=bool), array.shape)

    def outside(current: np.ndarray) -> np.ndarray:
        below = np.where(strict, current <= lows, current < lows)
        return below | (current > highs) | ~np.isfinite(current)

    mask = outside(array)
    while mask.any():
        array[mask] = rng.uniform(lows[mask], highs[mask])
        mask = outside(array)

    if array.ndim == 0:
        return float(array)
    return array


def capacity_from_divisor(divisor: int, weights: Sequence[float]) -> float:
    """W = ceil(D / 11 * sum(w)), capped at sum(w)"""
    total = float(np.sum(weights))
    capacity = float(math.ceil(divisor * total / CAPACITY_DIVISOR_BASE))
    return min(capacity, total)


def draw_capacity(
    weights: Sequence[float],
    divisor_range: Tuple[int, int],
    rng: np.random.Generator
) -> float:
    low, high = divisor_range
    divisor = int(rng.integers(low, high, endpoint=True))
    return capacity_from_divisor(divisor, weights)


def draw_items(
    config: GenerationConfig,
    size: int,
    rng: np.random.Generator
) -> Tuple[np.ndarray, np.ndarray]:
    """Weights and profits uniform within their bounds"""
    if config.integer_items:
        w_low, w_high = config.weight_bounds
        p_low, p_high = config.profit_bounds
        weights = rng.integers(max(1, math.ceil(w_low)), int(w_high), size=size, endpoint=True)
        profits = rng.integers(math.ceil(p_low), int(p_high), size=size, endpoint=True)
        return weights.astype(float), profits.astype(float)

    weights = rng.uniform(*config.weight_bounds, size=size)
    weights = repair(weights, config.weight_bounds, rng, strict_low=True)
    profits = rng.uniform(*config.profit_bounds, size=size)
    return weights, profits


def random_instance(config: GenerationConfig) -> TtpInstance:
    """Uniform random instance; a pure function of the config (seed included)"""
    rng = np.random.default_rng(config.seed)
    n = config.n

    coords = rng.uniform(*config.coord_bounds, size=(n, 2))
    availability = np.repeat(np.arange(1, n), config.ipn)
    weights, profits = draw_items(config, len(availability), rng)
    renting_rate = float(rng.uniform(*config.rent_bounds))
    capacity = draw_capacity(weights, config.capacity_divisor_range, rng)

    instance = TtpInstance(
        name=f"evolved-n{n}-ipn{config.ipn}-s{config.seed}",
        coords=[(float(x), float(y)) for x, y in coords],
        profits=profits.tolist(),
        weights=weights.tolist(),
        availability=availability.tolist(),
        capacity=capacity,
        renting_rate=renting_rate,
        v_min=config.v_min,
        v_max=config.v_max,
    )
    logger.debug(f"Generated {instance.name}: m={instance.n_items}, W={capacity:.0f}")
    return instance
