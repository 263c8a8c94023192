"""
Point Cloud Mutation - the ten disruptive operators applied to node and item clouds

Region operators sample a disc (center uniform in bounds, radius a random
fraction of the smaller bounds extent) and only move points inside it. The two
subset operators pick a random fraction of all points. Every result is repaired
back into the bounds by uniform redraws.
"""
from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple, Union

import numpy as np

from shared.config.constants import (
    COMPRESSION_FACTOR_RANGE,
    EXPANSION_FACTOR_RANGE,
    GRID_CELLS_RANGE,
    IMPLOSION_FACTOR_RANGE,
    NORMAL_SIGMA_FRACTION,
    RADIUS_FRACTION_RANGE,
    SUBSET_FRACTION_RANGE,
    MutationOperator,
)
from ttp_evolver.instance_space.generator import repair

CloudBounds = Sequence[Tuple[float, float]]

OPERATORS: Tuple[MutationOperator, ...] = tuple(MutationOperator)


@dataclass(frozen=True)
class Region:
    """Disc of effect of a region operator"""
    center: np.ndarray
    radius: float

    def mask(self, points: np.ndarray) -> np.ndarray:
        return np.linalg.norm(points - self.center, axis=1) <= self.radius


def _limits(bounds: CloudBounds) -> Tuple[np.ndarray, np.ndarray]:
    limits = np.asarray(bounds, dtype=float)
    return limits[:, 0], limits[:, 1]


def sample_region(bounds: CloudBounds, rng: np.random.Generator) -> Region:
    lows, highs = _limits(bounds)
    center = rng.uniform(lows, highs)
    radius = float(rng.uniform(*RADIUS_FRACTION_RANGE) * np.min(highs - lows))
    return Region(center=center, radius=radius)


def _random_axis(rng: np.random.Generator) -> np.ndarray:
    angle = rng.uniform(0.0, 2.0 * np.pi)
    return np.array([np.cos(angle), np.sin(angle)])


def explode(points: np.ndarray, region: Region, rng: np.random.Generator) -> np.ndarray:
    """Push points in the disc out to distance r + Exp(r/10) from the center"""
    mask = region.mask(points)
    offsets = points[mask] - region.center
    norms = np.linalg.norm(offsets, axis=1)

    # A point sitting on the center gets a random direction
    angles = rng.uniform(0.0, 2.0 * np.pi, size=len(offsets))
    fallback = np.column_stack([np.cos(angles), np.sin(angles)])
    safe_norms = np.where(norms > 0, norms, 1.0)[:, None]
    directions = np.where(norms[:, None] > 0, offsets / safe_norms, fallback)

    distances = region.radius + rng.exponential(0.1 * region.radius, size=len(offsets))
    result = points.copy()
    result[mask] = region.center + directions * distances[:, None]
    return result


def implode(points: np.ndarray, region: Region, rng: np.random.Generator) -> np.ndarray:
    """Contract the disc towards its center"""
    mask = region.mask(points)
    factor = rng.uniform(*IMPLOSION_FACTOR_RANGE)
    result = points.copy()
    result[mask] = region.center + factor * (points[mask] - region.center)
    return result


def cluster(points: np.ndarray, region: Region, rng: np.random.Generator) -> np.ndarray:
    """Redraw points of the disc from a normal cluster at the center"""
    mask = region.mask(points)
    result = points.copy()
    result[mask] = rng.normal(region.center, region.radius / 4.0, size=(int(mask.sum()), 2))
    return result


def _rescale_along_axis(
    points: np.ndarray,
    region: Region,
    rng: np.random.Generator,
    factor_range: Tuple[float, float]
) -> np.ndarray:
    mask = region.mask(points)
    axis = _random_axis(rng)
    factor = rng.uniform(*factor_range)
    offsets = points[mask] - region.center
    along = offsets @ axis
    result = points.copy()
    result[mask] = points[mask] + np.outer((factor - 1.0) * along, axis)
    return result


def compress(points: np.ndarray, region: Region, rng: np.random.Generator) -> np.ndarray:
    """Squeeze the disc along a random axis"""
    return _rescale_along_axis(points, region, rng, COMPRESSION_FACTOR_RANGE)


def expand(points: np.ndarray, region: Region, rng: np.random.Generator) -> np.ndarray:
    """Stretch the disc along a random axis"""
    return _rescale_along_axis(points, region, rng, EXPANSION_FACTOR_RANGE)


def snap_to_grid(points: np.ndarray, region: Region, rng: np.random.Generator) -> np.ndarray:
    """Snap points of the disc to the cell centers of a grid over its bounding square"""
    mask = region.mask(points)
    cells = int(rng.integers(GRID_CELLS_RANGE[0], GRID_CELLS_RANGE[1], endpoint=True))
    origin = region.center - region.radius
    size = 2.0 * region.radius / cells
    index = np.clip(np.floor((points[mask] - origin) / size), 0, cells - 1)
    result = points.copy()
    result[mask] = origin + (index + 0.5) * size
    return result


def project_to_line(points: np.ndarray, region: Region, rng: np.random.Generator) -> np.ndarray:
    """Project points of the disc onto a random line through the center"""
    mask = region.mask(points)
    axis = _random_axis(rng)
    along = (points[mask] - region.center) @ axis
    result = points.copy()
    result[mask] = region.center + np.outer(along, axis)
    return result


def rotate(points: np.ndarray, region: Region, rng: np.random.Generator) -> np.ndarray:
    mask = region.mask(points)
    angle = rng.uniform(0.0, 2.0 * np.pi)
    rotation = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
    result = points.copy()
    result[mask] = region.center + (points[mask] - region.center) @ rotation.T
    return result


def _subset(points: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    fraction = rng.uniform(*SUBSET_FRACTION_RANGE)
    count = max(1, int(round(fraction * len(points))))
    return rng.choice(len(points), size=count, replace=False)


def reposition_uniform(points: np.ndarray, bounds: CloudBounds, rng: np.random.Generator) -> np.ndarray:
    """Move a random subset to uniform positions"""
    lows, highs = _limits(bounds)
    chosen = _subset(points, rng)
    result = points.copy()
    result[chosen] = rng.uniform(lows, highs, size=(len(chosen), 2))
    return result


def perturb_normal(points: np.ndarray, bounds: CloudBounds, rng: np.random.Generator) -> np.ndarray:
    """Add Gaussian noise (sigma relative to the bounds extent) to a random subset"""
    lows, highs = _limits(bounds)
    chosen = _subset(points, rng)
    sigma = NORMAL_SIGMA_FRACTION * (highs - lows)
    result = points.copy()
    result[chosen] = points[chosen] + rng.normal(0.0, sigma, size=(len(chosen), 2))
    return result


RegionMutation = Callable[[np.ndarray, Region, np.random.Generator], np.ndarray]
SubsetMutation = Callable[[np.ndarray, CloudBounds, np.random.Generator], np.ndarray]

REGION_MUTATIONS: Dict[MutationOperator, RegionMutation] = {
    MutationOperator.EXPLOSION: explode,
    MutationOperator.IMPLOSION: implode,
    MutationOperator.CLUSTER: cluster,
    MutationOperator.COMPRESSION: compress,
    MutationOperator.EXPANSION: expand,
    MutationOperator.GRID: snap_to_grid,
    MutationOperator.LINEAR_PROJECTION: project_to_line,
    MutationOperator.ROTATION: rotate,
}

SUBSET_MUTATIONS: Dict[MutationOperator, SubsetMutation] = {
    MutationOperator.UNIFORM_REPOSITION: reposition_uniform,
    MutationOperator.NORMAL_PERTURBATION: perturb_normal,
}


def draw_operator(rng: np.random.Generator) -> MutationOperator:
    """Uniform choice over all operators"""
    return OPERATORS[int(rng.integers(len(OPERATORS)))]


def apply_mutation(
    points: np.ndarray,
    operator: MutationOperator,
    bounds: CloudBounds,
    rng: np.random.Generator,
    strict_low: Union[bool, Sequence[bool]] = False
) -> np.ndarray:
    """Apply one operator with the given generator and repair the result"""
    points = np.asarray(points, dtype=float)
    if operator in REGION_MUTATIONS:
        region = sample_region(bounds, rng)
        mutated = REGION_MUTATIONS[operator](points, region, rng)
    else:
        mutated = SUBSET_MUTATIONS[operator](points, bounds, rng)
    return repair(mutated, bounds, rng, strict_low=strict_low)


def mutate_point_cloud(
    points: np.ndarray,
    operator: Union[MutationOperator, str],
    bounds: CloudBounds,
    seed: int,
    strict_low: Union[bool, Sequence[bool]] = False
) -> np.ndarray:
    """Mutated copy of a 2-D point cloud; a pure function of its arguments"""
    if len(points) == 0:
        raise ValueError("Cannot mutate an empty point cloud")
    rng = np.random.default_rng(seed)
    return apply_mutation(points, MutationOperator(operator), bounds, rng, strict_low)
