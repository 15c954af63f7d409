# -*- coding: utf-8 -*-
"""Pydantic models for expansion options and CLI run configuration."""

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, Field

from src.core.config import get_settings
from src.services.field import Backend
from src.services.field import Field as CoefficientField


class OutputFormat(str, Enum):
    """Supported result formats."""

    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


class Subcommand(str, Enum):
    EXPAND = "expand"
    VERIFY = "verify"
    POLYGON = "polygon"


class ExpandOptions(BaseModel):
    """Options of one expansion run."""

    max_terms: int = Field(default=8, ge=1)
    max_depth: int = Field(default=32, ge=1)
    backend: Backend = Backend.EXACT
    precision: int = Field(default=256, ge=64)
    fast_path: bool = True
    workers: int = Field(default=1, ge=1)
    drop_threshold_bits: int | None = Field(default=None, ge=1)

    @classmethod
    def from_settings(cls, **overrides) -> "ExpandOptions":
        """Build options from settings, with explicit overrides taking priority."""
        settings = get_settings()
        values = {
            "max_terms": settings.max_terms,
            "max_depth": settings.max_depth,
            "precision": settings.precision,
            "fast_path": settings.fast_path,
            "workers": settings.workers,
            "drop_threshold_bits": settings.drop_threshold_bits,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def make_field(self) -> CoefficientField:
        return CoefficientField(self.backend, self.precision, self.drop_threshold_bits)


class RunConfig(BaseModel):
    """Parsed command line of one CLI invocation."""

    subcommand: Subcommand
    input: str
    terms: int = Field(default=8, ge=1)
    depth: int = Field(default=32, ge=1)
    backend: Backend = Backend.EXACT
    precision: int = Field(default=256, ge=64)
    format: OutputFormat = OutputFormat.TEXT
    svg_dir: Path | None = None
    samples: list[str] = Field(default_factory=list)
    fast_path: bool = True
    workers: int = Field(default=1, ge=1)

    def expand_options(self) -> ExpandOptions:
        return ExpandOptions.from_settings(
            max_terms=self.terms,
            max_depth=self.depth,
            backend=self.backend,
            precision=self.precision,
            fast_path=self.fast_path,
            workers=self.workers,
        )
