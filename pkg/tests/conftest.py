"""Test configuration and fixtures."""

import random

# Add src to Python path
import sys
from collections.abc import Generator
from pathlib import Path

import pytest
import structlog

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from ssg.core.config import Settings, get_settings
from ssg.domain.entities.automaton_group import AutomatonGroup
from ssg.domain.entities.rn_element import RNElement
from ssg.infrastructure.fixtures import builtin_group, index_two_element


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Isolate every test from the caller's ``SSG_*`` environment."""
    monkeypatch.setenv("SSG_ENVIRONMENT", "test")
    monkeypatch.setenv("SSG_COLOR", "false")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
    structlog.reset_defaults()


@pytest.fixture
def test_settings() -> Settings:
    """Settings as seen by the code under test."""
    return get_settings()


@pytest.fixture
def grigorchuk() -> AutomatonGroup:
    """The first Grigorchuk group."""
    return builtin_group("grigorchuk")


@pytest.fixture
def odometer() -> AutomatonGroup:
    """The binary adding machine."""
    return builtin_group("odometer")


@pytest.fixture
def reflection() -> AutomatonGroup:
    """Single state flipping every letter."""
    return builtin_group("reflection")


@pytest.fixture
def gupta_sidki() -> AutomatonGroup:
    """A ternary group used for alphabet-size coverage."""
    return builtin_group("gupta_sidki_3")


@pytest.fixture
def trivial_group() -> AutomatonGroup:
    """Binary automaton without states."""
    return builtin_group("trivial")


@pytest.fixture
def index_two() -> RNElement:
    """Reflection-group element fixing ``(01)`` with a nontrivial germ."""
    return index_two_element()


@pytest.fixture
def rng() -> random.Random:
    """Deterministic random source."""
    return random.Random(1234)
