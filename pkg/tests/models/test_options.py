# -*- coding: utf-8 -*-
"""Tests for option models."""

import pytest
from pydantic import ValidationError

from src.models.options import ExpandOptions, RunConfig, Subcommand
from src.services.field import Backend


class TestExpandOptions:
    def test_from_settings_defaults(self):
        opts = ExpandOptions.from_settings()
        assert opts.max_terms == 8
        assert opts.max_depth == 32
        assert opts.precision == 256

    def test_from_settings_env(self, monkeypatch):
        monkeypatch.setenv("PUISEUX_MAX_TERMS", "3")
        assert ExpandOptions.from_settings().max_terms == 3

    def test_overrides_win(self, monkeypatch):
        monkeypatch.setenv("PUISEUX_MAX_TERMS", "3")
        opts = ExpandOptions.from_settings(max_terms=5, workers=None)
        assert opts.max_terms == 5
        assert opts.workers == 1

    def test_make_field(self):
        fld = ExpandOptions(backend=Backend.NUMERIC, precision=128).make_field()
        assert fld.backend is Backend.NUMERIC
        assert fld.ctx.prec == 128

    @pytest.mark.parametrize("field, value", [("max_terms", 0), ("precision", 32), ("workers", 0)])
    def test_bounds(self, field, value):
        with pytest.raises(ValidationError):
            ExpandOptions(**{field: value})


class TestRunConfig:
    def test_expand_options(self):
        config = RunConfig(subcommand=Subcommand.EXPAND, input="y - x", terms=4, backend=Backend.NUMERIC)
        opts = config.expand_options()
        assert opts.max_terms == 4
        assert opts.backend is Backend.NUMERIC
