"""Shared utilities package"""
from shared.utils.logger import get_logger, TTPLogger
from shared.utils.seeding import derive_seed
from shared.utils.errors import (
    TTPError,
    InfeasiblePackingError,
    ConfigurationError,
    TtpFormatError
)

__all__ = [
    'get_logger',
    'TTPLogger',
    'derive_seed',
    'TTPError',
    'InfeasiblePackingError',
    'ConfigurationError',
    'TtpFormatError'
]
