"""
linrep - linear representations of functions on finite sets
"""

__version__ = "1.0.0"
__license__ = "MIT"

from src.core import (
    IntPoly,
    FiniteFunction,
    LinearRepresentation,
    Certificate,
    Mode,
    parse_function,
    construct,
    verify,
    search_minimal
)
from src.config import get_config_loader, get_config, get_settings

__all__ = [
    'IntPoly',
    'FiniteFunction',
    'LinearRepresentation',
    'Certificate',
    'Mode',
    'parse_function',
    'construct',
    'verify',
    'search_minimal',
    'get_config_loader',
    'get_config',
    'get_settings'
]
