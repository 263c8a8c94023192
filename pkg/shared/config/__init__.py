"""Shared configuration package"""
from shared.config.constants import (
    SolverId,
    FitnessKind,
    MutationOperator,
    PORTFOLIO,
    REGION_OPERATORS
)

__all__ = [
    'SolverId',
    'FitnessKind',
    'MutationOperator',
    'PORTFOLIO',
    'REGION_OPERATORS'
]
