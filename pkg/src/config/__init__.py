"""
Configuration module for the linear representation toolkit
"""

from .loader import ConfigLoader, get_config_loader, get_config, reset_config_loader
from .settings import (
    ConfigRule,
    ValidationType,
    ConfigValidationError,
    Settings,
    get_settings,
    reset_settings
)

__all__ = [
    'ConfigLoader',
    'get_config_loader',
    'get_config',
    'reset_config_loader',
    'ConfigRule',
    'ValidationType',
    'ConfigValidationError',
    'Settings',
    'get_settings',
    'reset_settings'
]
