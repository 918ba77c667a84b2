"""Tests for settings and logging configuration"""
import logging

import pytest
from pydantic import ValidationError

from adaptive_heaps.core.config import Settings
from adaptive_heaps.core.logging_config import configure_logging


class TestSettings:
    """Test class for Settings"""

    @pytest.fixture(autouse=True)
    def clean_env(self, monkeypatch):
        for name in ("LOG_LEVEL", "MAX_WORKERS", "SLOT_BOUND_SLACK", "VALIDATE_EVERY_OP", "DEFAULT_SEED"):
            monkeypatch.delenv(f"HEAPS_{name}", raising=False)

    def test_defaults(self):
        """Test the default settings"""
        s = Settings(_env_file=None)
        assert s.LOG_LEVEL == "INFO"
        assert s.VALIDATE_EVERY_OP is False
        assert s.DEGREE_BOUND_SLACK == 1
        assert s.SLOT_BOUND_SLACK == 2
        assert s.SLOT_TABLE_INITIAL_SIZE == 91
        assert s.PAIRING_BUDGET_FACTOR == 4
        assert s.MAX_WORKERS == 1

    def test_env_overrides(self, monkeypatch):
        """Test HEAPS_ environment variables override defaults"""
        monkeypatch.setenv("HEAPS_LOG_LEVEL", "debug")
        monkeypatch.setenv("HEAPS_VALIDATE_EVERY_OP", "true")
        monkeypatch.setenv("HEAPS_DEFAULT_SEED", "7")
        s = Settings(_env_file=None)
        assert s.LOG_LEVEL == "DEBUG"
        assert s.VALIDATE_EVERY_OP is True
        assert s.DEFAULT_SEED == 7

    def test_env_file(self, tmp_path):
        """Test settings read from an env file"""
        env = tmp_path / ".env"
        env.write_text("HEAPS_MAX_WORKERS=4\n")
        assert Settings(_env_file=str(env)).MAX_WORKERS == 4

    @pytest.mark.parametrize("name,value", [("MAX_WORKERS", "0"), ("SLOT_BOUND_SLACK", "-1")])
    def test_invalid_values(self, monkeypatch, name, value):
        """Test out-of-range values are rejected"""
        monkeypatch.setenv(f"HEAPS_{name}", value)
        with pytest.raises(ValidationError):
            Settings(_env_file=None)


class TestConfigureLogging:
    """Test class for configure_logging"""

    def test_sets_root_level(self):
        """Test configure_logging sets the root level"""
        configure_logging("debug")
        assert logging.getLogger().level == logging.DEBUG
        configure_logging("WARNING")
        assert logging.getLogger().level == logging.WARNING
