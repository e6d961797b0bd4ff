"""Unit tests for settings and logging configuration."""

import pytest
import structlog
from pydantic import ValidationError

from ssg.core.config import Settings, get_settings, setup_logging


@pytest.mark.unit
class TestSettings:
    """Test Settings loading and validation."""

    def test_defaults(self, test_settings):
        """Test default bounds."""
        assert test_settings.environment == "test"
        assert test_settings.log_level == "WARNING"
        assert test_settings.nucleus_max_size == 64
        assert test_settings.germ_cap == 16
        assert test_settings.default_cases == 25
        assert test_settings.color is False

    def test_environment_overrides(self, monkeypatch):
        """Test ``SSG_*`` variables override defaults."""
        monkeypatch.setenv("SSG_GERM_CAP", "4")
        monkeypatch.setenv("SSG_LOG_LEVEL", "debug")
        get_settings.cache_clear()
        settings = get_settings()
        assert settings.germ_cap == 4
        assert settings.log_level == "DEBUG"

    def test_settings_are_cached(self):
        """Test ``get_settings`` returns one instance."""
        assert get_settings() is get_settings()

    def test_bounds_must_be_positive(self, monkeypatch):
        """Test non-positive bounds are rejected."""
        monkeypatch.setenv("SSG_TRANSPORTER_CAP", "0")
        with pytest.raises(ValidationError, match="positive"):
            Settings()

    def test_invalid_environment(self):
        """Test unknown environments."""
        with pytest.raises(ValidationError, match="Environment must be one of"):
            Settings(environment="staging")

    def test_invalid_log_level(self):
        """Test unknown log levels."""
        with pytest.raises(ValidationError, match="Log level must be one of"):
            Settings(log_level="LOUD")

    def test_environment_helpers(self):
        """Test the development predicate behind console logging."""
        assert Settings(environment="development").is_development()
        assert not Settings(environment="production").is_development()


@pytest.mark.unit
class TestLogging:
    """Test structlog setup."""

    def test_logs_go_to_stderr(self, capsys):
        """Test stdout stays clean for command output."""
        setup_logging(Settings(environment="production", log_level="INFO"))
        structlog.get_logger("ssg.test").info("Nucleus computed", size=5)
        captured = capsys.readouterr()
        assert captured.out == ""
        assert '"event": "Nucleus computed"' in captured.err
        assert '"size": 5' in captured.err

    def test_level_filters(self, capsys):
        """Test records below the configured level are dropped."""
        setup_logging(Settings(environment="production", log_level="ERROR"))
        structlog.get_logger("ssg.test").warning("Best-effort mover search found nothing")
        assert capsys.readouterr().err == ""
