"""
Shared fixtures for the test suite
"""

import logging
import os

import pytest
from hypothesis import HealthCheck, settings

from src.config import reset_settings
from src.core.funcgraph import FiniteFunction


# Adjugates of 8x8 characteristic matrices overrun the default deadline;
# fresh_settings runs once per test, not once per example
settings.register_profile(
    "linrep",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("linrep")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Rebuild configuration for every test from a clean LINREP_ environment"""
    for key in list(os.environ):
        if key.startswith('LINREP_'):
            monkeypatch.delenv(key)
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    reset_settings()
    yield
    reset_settings()
    # drop handlers the CLI attached to CliRunner streams
    for handler in root.handlers[:]:
        if handler not in handlers and type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(level)


@pytest.fixture
def quadratic():
    """x -> x^2 on Z/3Z: 0 -> 0, 1 -> 1, 2 -> 1"""
    return FiniteFunction((0, 1, 1))


@pytest.fixture
def swap():
    return FiniteFunction((1, 0))


@pytest.fixture
def singleton():
    return FiniteFunction((0,))
