"""
Validated Settings
Typed view of the merged configuration, checked against declarative rules.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, List, Optional, Union

from src.core.errors import InputError

from .loader import ConfigLoader, get_config_loader, reset_config_loader


logger = logging.getLogger(__name__)


class ValidationType(Enum):
    """Configuration validation types"""
    STRING = "string"
    INTEGER = "integer"


@dataclass
class ConfigRule:
    """Validation rule for a configuration key"""
    name: str
    validation_type: ValidationType
    required: bool = True
    min_value: Optional[Union[int, float]] = None
    max_value: Optional[Union[int, float]] = None
    choices: Optional[List[Any]] = None
    description: str = ""


class ConfigValidationError(InputError):
    """Raised when configuration validation fails"""
    pass


RULES = [
    ConfigRule('enum.cap', ValidationType.INTEGER, min_value=0,
               description="largest n for exhaustive enumeration"),
    ConfigRule('oracle.max_m', ValidationType.INTEGER, min_value=1,
               description="largest modulus tried by the minimal search"),
    ConfigRule('oracle.max_assignments', ValidationType.INTEGER, min_value=1,
               description="backtracking node budget of the minimal search"),
    ConfigRule('batch.workers', ValidationType.INTEGER, min_value=1,
               description="threads used by batch sweeps"),
    ConfigRule('batch.mode', ValidationType.STRING, choices=['bound', 'tight']),
    ConfigRule('logging.level', ValidationType.STRING,
               choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']),
    ConfigRule('logging.format', ValidationType.STRING),
]


@dataclass(frozen=True)
class Settings:
    """Validated runtime settings"""
    enum_cap: int
    oracle_max_m: int
    oracle_max_assignments: int
    batch_workers: int
    batch_mode: str
    log_level: str
    log_format: str

    @classmethod
    def from_loader(cls, loader: ConfigLoader) -> 'Settings':
        """
        Validate the loader's configuration and build settings from it.

        Raises:
            ConfigValidationError: If any rule fails
        """
        validate(loader)
        return cls(
            enum_cap=int(loader.get('enum.cap')),
            oracle_max_m=int(loader.get('oracle.max_m')),
            oracle_max_assignments=int(loader.get('oracle.max_assignments')),
            batch_workers=int(loader.get('batch.workers')),
            batch_mode=loader.get('batch.mode'),
            log_level=str(loader.get('logging.level')).upper(),
            log_format=loader.get('logging.format'),
        )


def validate(loader: ConfigLoader, rules: Optional[List[ConfigRule]] = None) -> bool:
    """
    Validate configuration values against rules.

    Raises:
        ConfigValidationError: Listing every failed rule
    """
    errors = []
    for rule in rules or RULES:
        value = loader.get(rule.name)
        if value is None:
            if rule.required:
                errors.append(f"Required configuration '{rule.name}' is missing")
            continue
        try:
            _validate_value(value, rule)
        except ConfigValidationError as e:
            errors.append(str(e))

    if errors:
        raise ConfigValidationError('\n'.join(errors))

    logger.debug("Configuration validation passed")
    return True


def _validate_value(value: Any, rule: ConfigRule):
    if rule.validation_type == ValidationType.INTEGER:
        if isinstance(value, bool):
            raise ConfigValidationError(f"{rule.name}: '{value}' is not a valid integer")
        try:
            val = int(value)
        except (TypeError, ValueError):
            raise ConfigValidationError(f"{rule.name}: '{value}' is not a valid integer")
        if rule.min_value is not None and val < rule.min_value:
            raise ConfigValidationError(f"{rule.name}: value {val} < min {rule.min_value}")
        if rule.max_value is not None and val > rule.max_value:
            raise ConfigValidationError(f"{rule.name}: value {val} > max {rule.max_value}")

    elif rule.validation_type == ValidationType.STRING:
        if not isinstance(value, str):
            raise ConfigValidationError(f"{rule.name}: '{value}' is not a string")
        if rule.name == 'logging.level':
            value = value.upper()

    if rule.choices and value not in rule.choices:
        raise ConfigValidationError(f"{rule.name}: '{value}' not in allowed choices {rule.choices}")


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or build the process-wide settings"""
    global _settings
    if _settings is None:
        _settings = Settings.from_loader(get_config_loader())
    return _settings


def reset_settings():
    """Forget cached settings and the global loader"""
    global _settings
    _settings = None
    reset_config_loader()
