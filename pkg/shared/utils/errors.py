"""
Exception hierarchy for the TTP toolkit
"""
from typing import Optional


class TTPError(Exception):
    """Base class for toolkit errors"""


class InfeasiblePackingError(TTPError, ValueError):
    """Packing plan exceeds the knapsack capacity"""

    def __init__(self, weight: float, capacity: float):
        super().__init__(f"Packing weight {weight} exceeds capacity {capacity}")
        self.weight = weight
        self.capacity = capacity


class ConfigurationError(TTPError, ValueError):
    """Invalid or contradictory configuration"""


class TtpFormatError(TTPError, ValueError):
    """Malformed TTP benchmark file"""

    def __init__(self, message: str, line: Optional[int] = None, source: str = "<string>"):
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}")
        self.line = line
        self.source = source
