# -*- coding: utf-8 -*-
"""Expansion services."""

from src.services.field import Backend, Field, UniPoly, find_roots
from src.services.mpoly import XYPoly, shift_substitute, translate
from src.services.poly_parser import format_poly, parse_poly

__all__ = [
    "Backend",
    "Field",
    "UniPoly",
    "find_roots",
    "XYPoly",
    "shift_substitute",
    "translate",
    "format_poly",
    "parse_poly",
]
