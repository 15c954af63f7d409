# -*- coding: utf-8 -*-
from pathlib import Path

import pytest

from src.core.config import get_settings
from src.services.field import Backend, Field
from src.services.poly_parser import parse_poly

SAMPLES_DIR = Path(__file__).parent / "samples"

# Two cusps and a line through the origin
CUSP_TEXT = "2x^4 + x^2y + 4xy^2 + 4y^3"
# Three conjugate branches with ramification 3
CUBIC_TEXT = "x^5+8x^4-2x^2y^2-y^3+2y^4"
# Two branches that separate only at x^(11/2)
TANGENT_TEXT = "y^2+2x^2y+x^4+x^2y^2+xy^3+1/4y^4+x^4y+x^3y^2-1/2xy^4-1/2y^5"


@pytest.fixture(autouse=True)
def reset_settings():
    """Reset cached settings so environment patches take effect per test."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def exact_field():
    return Field(Backend.EXACT)


@pytest.fixture
def numeric_field():
    return Field(Backend.NUMERIC, precision=256)


@pytest.fixture
def cusp_poly(exact_field):
    return parse_poly(CUSP_TEXT, exact_field)


@pytest.fixture
def cubic_poly(numeric_field):
    return parse_poly(CUBIC_TEXT, numeric_field)


@pytest.fixture
def tangent_poly(numeric_field):
    return parse_poly(TANGENT_TEXT, numeric_field)


@pytest.fixture
def tangent_poly_exact(exact_field):
    return parse_poly(TANGENT_TEXT, exact_field)


@pytest.fixture
def samples_dir():
    return SAMPLES_DIR
