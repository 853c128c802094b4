"""Configuration management for toricnest computations."""

from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from toricnest.models.types import LPMethod, OrderKind


class GroebnerSettings(BaseSettings):
    """Limits and defaults for the binomial Buchberger engine."""

    model_config = SettingsConfigDict(
        env_prefix="TORICNEST_GROEBNER_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    max_reduction_steps: int = Field(
        default=1_000_000,
        description="Rewrite steps allowed in a single normal form computation",
        ge=1,
    )

    max_basis_size: int = Field(
        default=20_000,
        description="Abort Buchberger when the working basis grows past this size",
        ge=1,
    )

    default_order: OrderKind = Field(
        default=OrderKind.GREVLEX,
        description="Order used when none is supplied",
    )

    @field_validator("default_order", mode="before")
    @classmethod
    def validate_default_order(cls, v):
        """Convert string to OrderKind enum."""
        if isinstance(v, str):
            return OrderKind(v)
        return v


class FeasibilitySettings(BaseSettings):
    """Exact linear feasibility back end selection."""

    model_config = SettingsConfigDict(
        env_prefix="TORICNEST_LP_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    method: LPMethod = Field(
        default=LPMethod.AUTO,
        description="Feasibility solver (auto, fourier_motzkin, simplex)",
    )

    fourier_motzkin_max_variables: int = Field(
        default=6,
        description="Auto mode uses Fourier-Motzkin up to this many variables",
        ge=1,
    )

    fourier_motzkin_max_constraints: int = Field(
        default=5_000,
        description="Abort Fourier-Motzkin when an elimination stage grows past this",
        ge=1,
    )

    @field_validator("method", mode="before")
    @classmethod
    def validate_method(cls, v):
        """Convert string to LPMethod enum."""
        if isinstance(v, str):
            return LPMethod(v)
        return v


class ToricSettings(BaseSettings):
    """Toric ideal oracle limits."""

    model_config = SettingsConfigDict(
        env_prefix="TORICNEST_TORIC_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    enumeration_cap: int = Field(
        default=200_000,
        description="Maximum number of monomials enumerated by brute-force oracles",
        ge=1,
    )


class WalkSettings(BaseSettings):
    """Fiber walk demo defaults."""

    model_config = SettingsConfigDict(
        env_prefix="TORICNEST_WALK_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    default_seed: int = Field(
        default=0,
        description="Seed used when none is given on the command line",
        ge=0,
        lt=2**64,
    )

    default_steps: int = Field(
        default=1000,
        description="Number of walk steps when none is given",
        ge=0,
    )

    check_fibers: bool = Field(
        default=False,
        description="Check after every step that the walk stays in its fiber",
    )


class LoggingSettings(BaseSettings):
    """Logging configuration."""

    model_config = SettingsConfigDict(
        env_prefix="TORICNEST_LOG_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
    )

    format: str = Field(
        default="{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function}:{line} | {message}",
        description="Log message format",
    )

    json_output: bool = Field(
        default=False,
        description="Output logs in JSON format",
    )

    file_path: Path | None = Field(
        default=None,
        description="Log file path (None for stderr only)",
    )


class Settings(BaseSettings):
    """
    Main configuration class for toricnest.

    Loads settings from environment variables with TORICNEST_ prefix or from .env file.
    Nested configuration models handle specific concerns (engine limits, LP back end, ...).

    Example:
        >>> from toricnest.config import settings
        >>> print(settings.groebner.max_reduction_steps)
        1000000
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="TORICNEST_",
        case_sensitive=False,
    )

    debug: bool = Field(
        default=False,
        description="Enable debug mode",
    )

    groebner: GroebnerSettings = Field(
        default_factory=GroebnerSettings,
        description="Buchberger engine limits",
    )

    feasibility: FeasibilitySettings = Field(
        default_factory=FeasibilitySettings,
        description="Exact LP feasibility settings",
    )

    toric: ToricSettings = Field(
        default_factory=ToricSettings,
        description="Toric ideal oracle settings",
    )

    walk: WalkSettings = Field(
        default_factory=WalkSettings,
        description="Fiber walk settings",
    )

    logging: LoggingSettings = Field(
        default_factory=LoggingSettings,
        description="Logging configuration",
    )


# Create a global settings instance
settings = Settings()


def get_settings() -> Settings:
    """
    Get the global settings instance.

    Returns:
        Global settings instance
    """
    return settings


def create_test_settings(**overrides) -> Settings:
    """
    Create test settings with overrides.

    Args:
        **overrides: Settings to override for testing

    Returns:
        Settings instance with test-specific configuration
    """
    test_defaults = {
        "debug": True,
        "groebner": GroebnerSettings(max_reduction_steps=100_000),
        "walk": WalkSettings(check_fibers=True),
    }

    test_config = {**test_defaults, **overrides}

    return Settings(**test_config)
