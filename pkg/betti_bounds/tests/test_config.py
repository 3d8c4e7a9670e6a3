"""Tests for configuration loading, validation and logging."""

import logging
import os
import sys
from unittest import mock

import pytest
from pydantic import ValidationError

from betti_bounds.config import BettiConfig, SentryConfig, SurveyConfig
from betti_bounds.config.parser import (
    _format_validation_error,
    load_config,
    mask_sensitive_data,
)
from betti_bounds.exceptions import ConfigurationError
from betti_bounds.sentry_config import initialize_sentry


class TestBettiConfig:
    def test_defaults(self):
        config = BettiConfig()
        assert config.debug is False
        assert config.threads is None
        assert config.survey.default_trials == 100
        assert config.survey.default_seed == 0
        assert config.survey.max_terms == 5
        assert config.survey.max_coefficient == 100
        assert config.sentry.dsn is None
        assert config.sentry.enabled is False
        assert config.sentry.traces_sample_rate == 0.0

    def test_environment_aliases(self):
        env = {
            "DEBUG": "true",
            "BETTI_THREADS": "4",
            "BETTI_SURVEY_TRIALS": "25",
            "BETTI_SURVEY_SEED": "9",
        }
        with mock.patch.dict(os.environ, env):
            config = BettiConfig()
        assert config.debug is True
        assert config.threads == 4
        assert config.survey.default_trials == 25
        assert config.survey.default_seed == 9

    def test_threads_must_be_positive(self):
        with pytest.raises(ValidationError) as exc_info:
            BettiConfig(threads=0)
        assert "BETTI_THREADS must be at least 1" in _format_validation_error(
            exc_info.value
        )

    def test_survey_values_must_be_positive(self):
        with pytest.raises(ValidationError):
            SurveyConfig(max_terms=0)

    def test_sentry_sample_rate_range(self):
        with pytest.raises(ValidationError):
            SentryConfig(traces_sample_rate=1.5)

    def test_sentry_enabled_by_dsn(self):
        with mock.patch.dict(os.environ, {"SENTRY_DSN": "https://key@sentry.example.com/1"}):
            assert SentryConfig().enabled is True


def test_format_validation_error():
    """Each error becomes one indented line under a heading."""
    with pytest.raises(ValidationError) as exc_info:
        BettiConfig(threads="many")
    formatted = _format_validation_error(exc_info.value)
    assert formatted.startswith("Configuration Error:\n  - ")
    assert "threads" in formatted.lower()


def test_mask_sensitive_data():
    data = {
        "debug": True,
        "sentry": {"dsn": "https://key@sentry.example.com/1", "environment": "ci"},
        "list_data": [{"dsn": "https://other@sentry.example.com/2"}],
        "unset": {"dsn": None},
    }

    masked = mask_sensitive_data(data)

    assert masked["debug"] is True
    assert masked["sentry"]["dsn"] == "********"
    assert masked["sentry"]["environment"] == "ci"
    assert masked["list_data"][0]["dsn"] == "********"
    assert masked["unset"]["dsn"] is None


class TestLoadConfig:
    @mock.patch("betti_bounds.config.parser.logging.basicConfig")
    def test_logging_goes_to_stderr(self, mock_basic_config):
        with mock.patch.dict(os.environ, {"DEBUG": "true"}):
            config = load_config()

        assert config.debug is True
        kwargs = mock_basic_config.call_args.kwargs
        assert kwargs["level"] == logging.DEBUG
        assert kwargs["handlers"][0].stream is sys.stderr

    @mock.patch("betti_bounds.config.parser.logging.basicConfig")
    def test_warning_level_by_default(self, mock_basic_config):
        load_config()
        assert mock_basic_config.call_args.kwargs["level"] == logging.WARNING

    @mock.patch("betti_bounds.config.parser.logging.basicConfig")
    @mock.patch("betti_bounds.config.parser.logger")
    def test_logs_masked_configuration(self, mock_logger, _mock_basic_config):
        env = {"DEBUG": "true", "SENTRY_DSN": "https://key@sentry.example.com/1"}
        with mock.patch.dict(os.environ, env), mock.patch(
            "betti_bounds.sentry_config.initialize_sentry"
        ) as mock_init:
            load_config()

        mock_init.assert_called_once()
        merged = [
            call for call in mock_logger.debug.call_args_list
            if "Merged configuration" in str(call)
        ]
        assert merged
        assert "********" in merged[0].args[1]
        assert "key@sentry" not in merged[0].args[1]

    def test_invalid_environment_raises(self):
        with mock.patch.dict(os.environ, {"BETTI_THREADS": "0"}):
            with pytest.raises(ConfigurationError) as exc_info:
                load_config()
        assert str(exc_info.value).startswith("Configuration Error:")
        assert "BETTI_THREADS must be at least 1" in str(exc_info.value)
        assert isinstance(exc_info.value.original_error, ValidationError)


class TestInitializeSentry:
    def test_without_dsn(self):
        assert initialize_sentry(SentryConfig()) is False

    @mock.patch("sentry_sdk.init")
    def test_with_dsn(self, mock_init):
        config = SentryConfig(dsn="https://key@sentry.example.com/1", environment="ci")
        assert initialize_sentry(config, release="1.0") is True
        kwargs = mock_init.call_args.kwargs
        assert kwargs["environment"] == "ci"
        assert kwargs["release"] == "1.0"
        assert kwargs["send_default_pii"] is False
