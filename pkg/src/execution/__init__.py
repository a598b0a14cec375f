"""
Execution Module
"""

from .engine import IntegrationEngine, integrate
from .localization import LocalizationOracle

__all__ = ["IntegrationEngine", "LocalizationOracle", "integrate"]
