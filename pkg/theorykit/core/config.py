"""Toolkit configuration management."""

from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Truth tables over more atoms than this are never enumerated.
BRUTE_FORCE_HARD_CAP = 20


class Settings(BaseSettings):
    """Toolkit settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="THEORYKIT_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "theorykit"
    app_version: str = "0.1.0"
    debug: bool = False

    # Logging
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # Deduction
    max_clauses: int = Field(default=100_000, ge=1)
    subsumption: bool = True
    brute_force_max_atoms: int = Field(default=BRUTE_FORCE_HARD_CAP, ge=0)

    # Graphs
    closure_method: str = "matrix"

    # DSL
    parser_max_depth: int = Field(default=100, ge=8)
    dot_graph_name: str = "theory"

    @field_validator("brute_force_max_atoms")
    @classmethod
    def clamp_atom_cap(cls, v: int) -> int:
        """Never exceed the hard cap."""
        return min(v, BRUTE_FORCE_HARD_CAP)

    @field_validator("closure_method")
    @classmethod
    def check_closure_method(cls, v: str) -> str:
        """Accept only known closure methods."""
        v = v.strip().lower()
        if v not in {"matrix", "matrix-power", "fw", "floyd-warshall"}:
            raise ValueError(f"unknown closure method: {v}")
        return v


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
