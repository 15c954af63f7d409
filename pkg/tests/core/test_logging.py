# -*- coding: utf-8 -*-
"""Tests for structured logging system."""

import logging
from unittest.mock import patch

import structlog

from src.core.logging import (
    bind_context,
    clear_context,
    get_log_level,
    get_logger,
    get_processors,
    setup_logging,
)


class TestLogging:
    """Tests for logging configuration."""

    def setup_method(self):
        """Reset logging state before each test."""
        structlog.reset_defaults()

    def test_get_log_level_default(self):
        """Test default log level is WARNING so stdout results stay quiet."""
        assert get_log_level() == logging.WARNING

    def test_get_log_level_debug(self):
        """Test DEBUG log level."""
        with patch("src.core.logging.get_settings") as mock_settings:
            mock_settings.return_value.log_level = "debug"
            assert get_log_level() == logging.DEBUG

    def test_get_log_level_error(self):
        """Test ERROR log level."""
        with patch("src.core.logging.get_settings") as mock_settings:
            mock_settings.return_value.log_level = "ERROR"
            assert get_log_level() == logging.ERROR

    def test_get_log_level_invalid_defaults_to_warning(self):
        """Test invalid log level falls back to WARNING."""
        with patch("src.core.logging.get_settings") as mock_settings:
            mock_settings.return_value.log_level = "INVALID"
            assert get_log_level() == logging.WARNING

    def test_json_processors_end_with_json_renderer(self):
        processors = get_processors(json_format=True)
        assert isinstance(processors[-1], structlog.processors.JSONRenderer)

    def test_console_processors_end_with_console_renderer(self):
        processors = get_processors(json_format=False)
        assert isinstance(processors[-1], structlog.dev.ConsoleRenderer)

    def test_setup_logging_configures_structlog(self):
        """Test that setup_logging configures structlog properly."""
        with patch("src.core.logging.get_settings") as mock_settings:
            mock_settings.return_value.log_level = "INFO"
            mock_settings.return_value.log_format = "json"

            setup_logging()

            logger = get_logger("test")
            assert logger is not None
            assert structlog.is_configured()

    def test_logs_go_to_stderr(self, capsys):
        """Test that log lines never reach standard output."""
        with patch("src.core.logging.get_settings") as mock_settings:
            mock_settings.return_value.log_level = "WARNING"
            mock_settings.return_value.log_format = "console"
            setup_logging()

        get_logger("test.stderr").warning("Characteristic polynomial has no rational root")

        captured = capsys.readouterr()
        assert "no rational root" not in captured.out


class TestContextBinding:
    """Tests for context binding functions."""

    def setup_method(self):
        clear_context()

    def teardown_method(self):
        clear_context()

    def test_bind_context(self):
        """Test binding context variables."""
        bind_context(command="expand", backend="exact")

        ctx = structlog.contextvars.get_contextvars()
        assert ctx.get("command") == "expand"
        assert ctx.get("backend") == "exact"

    def test_clear_context(self):
        bind_context(command="expand")
        clear_context()

        ctx = structlog.contextvars.get_contextvars()
        assert "command" not in ctx
