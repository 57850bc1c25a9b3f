"""Shared fixtures for the theorykit test suite."""

import random
from pathlib import Path

import pytest

from theorykit.core.config import get_settings
from theorykit.dsl.document import TheoryDocument
from theorykit.dsl.parser import parse_theory_file

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test sees settings built from the current environment."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def load(name: str) -> TheoryDocument:
    result = parse_theory_file(FIXTURES / name)
    assert result.document is not None, [str(d) for d in result.diagnostics]
    return result.document


@pytest.fixture
def casestudy() -> TheoryDocument:
    return load("casestudy.thy")


@pytest.fixture
def implications() -> TheoryDocument:
    return load("implications.thy")


@pytest.fixture
def determinant() -> TheoryDocument:
    return load("determinant.thy")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
