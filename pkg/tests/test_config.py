"""Test configuration loading."""

import pytest
from pydantic import ValidationError

from theorykit.core.config import BRUTE_FORCE_HARD_CAP, Settings, get_settings
from theorykit.services.deduction.oracle import atom_cap
from theorykit.services.graphs.closure import FloydWarshallClosure, MatrixPowerClosure, get_closure_method


def test_defaults():
    settings = get_settings()
    assert settings.app_name == "theorykit"
    assert settings.max_clauses == 100_000
    assert settings.subsumption is True
    assert settings.brute_force_max_atoms == BRUTE_FORCE_HARD_CAP
    assert settings.closure_method == "matrix"
    assert settings.parser_max_depth == 100


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("THEORYKIT_MAX_CLAUSES", "50")
    monkeypatch.setenv("THEORYKIT_CLOSURE_METHOD", " FW ")
    get_settings.cache_clear()

    settings = get_settings()
    assert settings.max_clauses == 50
    assert settings.closure_method == "fw"
    assert isinstance(get_closure_method(), FloydWarshallClosure)


def test_settings_are_cached():
    assert get_settings() is get_settings()


def test_atom_cap_is_clamped(monkeypatch):
    monkeypatch.setenv("THEORYKIT_BRUTE_FORCE_MAX_ATOMS", "64")
    get_settings.cache_clear()
    assert get_settings().brute_force_max_atoms == BRUTE_FORCE_HARD_CAP
    assert atom_cap(500) == BRUTE_FORCE_HARD_CAP
    assert atom_cap(3) == 3


def test_unknown_closure_method_is_rejected():
    with pytest.raises(ValidationError):
        Settings(closure_method="warshall-ish")


def test_explicit_method_beats_settings(monkeypatch):
    monkeypatch.setenv("THEORYKIT_CLOSURE_METHOD", "fw")
    get_settings.cache_clear()
    assert isinstance(get_closure_method("matrix-power"), MatrixPowerClosure)
