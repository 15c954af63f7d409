# -*- coding: utf-8 -*-
"""Data models."""

from src.models.options import ExpandOptions, OutputFormat, RunConfig, Subcommand
from src.models.series import (
    Diagnostic,
    ExpansionResult,
    ExpansionState,
    PuiseuxSeries,
    StepEvent,
    Termination,
)

__all__ = [
    "ExpandOptions",
    "OutputFormat",
    "RunConfig",
    "Subcommand",
    "Diagnostic",
    "ExpansionResult",
    "ExpansionState",
    "PuiseuxSeries",
    "StepEvent",
    "Termination",
]
