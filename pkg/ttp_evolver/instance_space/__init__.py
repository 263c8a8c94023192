"""Instance space package - random generation and mutation"""
from ttp_evolver.instance_space.generator import (
    capacity_from_divisor,
    draw_capacity,
    random_instance,
    repair
)
from ttp_evolver.instance_space.point_cloud import (
    OPERATORS,
    Region,
    apply_mutation,
    draw_operator,
    explode,
    mutate_point_cloud,
    sample_region
)
from ttp_evolver.instance_space.mutator import mutate_instance, mutate_renting_rate

__all__ = [
    'capacity_from_divisor',
    'draw_capacity',
    'random_instance',
    'repair',
    'OPERATORS',
    'Region',
    'apply_mutation',
    'draw_operator',
    'explode',
    'mutate_point_cloud',
    'sample_region',
    'mutate_instance',
    'mutate_renting_rate'
]
