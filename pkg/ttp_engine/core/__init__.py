"""TTP core package"""
from ttp_engine.core.objective import (
    ObjectiveEvaluator,
    ceil_distance_matrix,
    canonical_tour,
    distance,
    evaluate_objective,
    total_profit,
    total_weight
)

__all__ = [
    'ObjectiveEvaluator',
    'ceil_distance_matrix',
    'canonical_tour',
    'distance',
    'evaluate_objective',
    'total_profit',
    'total_weight'
]
