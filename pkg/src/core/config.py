# -*- coding: utf-8 -*-
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings.

    Settings are loaded from environment variables prefixed with ``PUISEUX_``
    with optional .env file support, e.g. ``PUISEUX_PRECISION=512``.
    """

    model_config = SettingsConfigDict(
        env_prefix="PUISEUX_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # App
    app_name: str = "puiseux"
    app_version: str = "0.1.0"

    # Expansion defaults
    precision: int = Field(default=256, ge=64)
    max_terms: int = Field(default=8, ge=1)
    max_depth: int = Field(default=32, ge=1)
    fast_path: bool = True
    workers: int = Field(default=1, ge=1)

    # Numeric canonicalization: coefficients below 2^-bits * scale are dropped
    drop_threshold_bits: int | None = None

    # Verification
    samples: str = "1e-2,1e-3,1e-4"
    slope_tolerance: float = 0.05

    # Output
    print_digits: int = 12
    svg_width: int = 640
    svg_height: int = 480

    # Logging
    log_level: str = "WARNING"
    log_format: str = "console"  # "json" for machine-readable logs

    @property
    def sample_points(self) -> list[str]:
        """Get verification sample points as a list of decimal strings."""
        return [s.strip() for s in self.samples.split(",") if s.strip()]


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
