# -*- coding: utf-8 -*-
"""
Workflows module.

Provides the Newton-Puiseux branch exploration.
"""

from src.workflows.expansion import (
    ExpansionWorkflow,
    detect_termination,
    expand_all,
    expand_step,
    regular_tail,
)

__all__ = [
    "ExpansionWorkflow",
    "detect_termination",
    "expand_all",
    "expand_step",
    "regular_tail",
]
