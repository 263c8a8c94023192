"""Fitness package"""
from ttp_evolver.fitness.aggregation import aggregate, build_profile, order_statistic_position
from ttp_evolver.fitness.fitness_functions import (
    actual_ranking,
    compute_fitness,
    fitness_compare,
    fitness_explicit,
    fitness_no_order,
    fitness_pairwise,
    is_success
)

__all__ = [
    'aggregate',
    'build_profile',
    'order_statistic_position',
    'actual_ranking',
    'compute_fitness',
    'fitness_compare',
    'fitness_explicit',
    'fitness_no_order',
    'fitness_pairwise',
    'is_success'
]
