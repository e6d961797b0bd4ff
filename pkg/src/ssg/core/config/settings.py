"""Toolkit settings and configuration."""

from __future__ import annotations

from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from ``SSG_*`` environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="SSG_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    environment: str = Field(
        default="development", description="Environment (development/test/production)"
    )
    log_level: str = Field(default="WARNING", description="Logging level")
    color: bool = Field(default=True, description="Colored terminal output")

    # Semi-algorithm bounds
    nucleus_max_size: int = Field(
        default=64, description="Largest candidate nucleus before giving up"
    )
    nucleus_max_depth: int = Field(
        default=64, description="Deepest restriction graph explored per product"
    )
    contraction_cap: int = Field(
        default=64, description="Deepest level searched by contraction_depth"
    )
    germ_cap: int = Field(
        default=16, description="Largest block index tried when stabilizing germs"
    )
    transporter_cap: int = Field(
        default=64, description="Extra letters allowed when shrinking cones"
    )

    # Best-effort mover search
    mover_word_length: int = Field(default=2, description="Longest word tried")
    mover_prefix_length: int = Field(default=4, description="Longest prefix tried")

    # Verification suites
    default_seed: int = Field(default=0, description="Seed for suite sampling")
    default_cases: int = Field(default=25, description="Cases per suite check")

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        """Validate environment setting."""
        allowed = {"development", "test", "production"}
        if v.lower() not in allowed:
            msg = f"Environment must be one of {allowed}"
            raise ValueError(msg)
        return v.lower()

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level setting."""
        allowed = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in allowed:
            msg = f"Log level must be one of {allowed}"
            raise ValueError(msg)
        return v.upper()

    @field_validator(
        "nucleus_max_size",
        "nucleus_max_depth",
        "contraction_cap",
        "germ_cap",
        "transporter_cap",
        "mover_word_length",
        "mover_prefix_length",
        "default_cases",
    )
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Bounds and counts must be positive."""
        if v <= 0:
            msg = "Bounds must be positive integers"
            raise ValueError(msg)
        return v

    def is_development(self) -> bool:
        """Check if running in development environment."""
        return self.environment == "development"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings."""
    return Settings()
