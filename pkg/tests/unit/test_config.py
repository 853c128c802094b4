"""Tests for settings and run report models."""

import pytest
from pydantic import ValidationError

from toricnest.config import (
    GroebnerSettings,
    LoggingSettings,
    Settings,
    WalkSettings,
    create_test_settings,
    get_settings,
)
from toricnest.logging import resolve_log_settings
from toricnest.models.reports import RunReport, Verdicts
from toricnest.models.types import LPMethod, OrderKind


class TestSettings:
    """Test cases for Settings."""

    def test_defaults(self):
        """Test the global settings defaults."""
        settings = get_settings()
        assert settings.groebner.default_order is OrderKind.GREVLEX
        assert settings.feasibility.method is LPMethod.AUTO
        assert settings.walk.default_steps == 1000

    def test_create_test_settings(self):
        """Test test settings turn on fiber checks and accept overrides."""
        settings = create_test_settings(debug=False)
        assert settings.walk.check_fibers
        assert settings.groebner.max_reduction_steps == 100_000
        assert not settings.debug

    def test_env_prefix(self, monkeypatch):
        """Test section settings read their own environment prefix."""
        monkeypatch.setenv("TORICNEST_GROEBNER_DEFAULT_ORDER", "lex")
        monkeypatch.setenv("TORICNEST_WALK_DEFAULT_SEED", "17")
        assert GroebnerSettings().default_order is OrderKind.LEX
        assert WalkSettings().default_seed == 17
        assert Settings().groebner.default_order is OrderKind.LEX

    def test_validation(self):
        """Test out-of-range values are rejected."""
        with pytest.raises(ValidationError):
            GroebnerSettings(max_basis_size=0)
        with pytest.raises(ValidationError):
            WalkSettings(default_seed=-1)


class TestLogLevel:
    """Test cases for resolve_log_settings."""

    def test_configured_level(self):
        """Test the configured level is kept outside debug mode."""
        settings = Settings(debug=False, logging=LoggingSettings(level="WARNING"))
        assert resolve_log_settings(settings).level == "WARNING"

    def test_debug_mode(self):
        """Test debug mode lowers the level to DEBUG."""
        settings = Settings(debug=True, logging=LoggingSettings(level="WARNING"))
        resolved = resolve_log_settings(settings)
        assert resolved.level == "DEBUG"
        assert resolved.format == settings.logging.format

    def test_explicit_level_wins(self):
        """Test a command-line level overrides debug mode."""
        settings = Settings(debug=True)
        assert resolve_log_settings(settings, "ERROR").level == "ERROR"


class TestReports:
    """Test cases for Verdicts and RunReport."""

    def test_unrequested_verdicts_pass(self):
        """Test an empty verdict set passes."""
        assert Verdicts().passed
        assert Verdicts().requested() == {}

    def test_failed_verdict(self):
        """Test one false verdict fails the run."""
        verdicts = Verdicts(marking_certificate=True, s_pairs_reduce_to_zero=False)
        assert not verdicts.passed
        assert verdicts.requested() == {"marking_certificate": True, "s_pairs_reduce_to_zero": False}

    def test_weights_are_not_a_verdict(self):
        """Test certificate weights do not count as a verdict."""
        verdicts = Verdicts(marking_certificate=True, certificate_weights=["1", "0"])
        assert verdicts.requested() == {"marking_certificate": True}

    def test_report_round_trip(self):
        """Test a report survives JSON serialization."""
        report = RunReport(command=["toric", "a.cfg"], basis_size=3, verdicts=Verdicts(fiber_preserved=True))
        assert RunReport.model_validate_json(report.model_dump_json()) == report

    def test_extra_fields_forbidden(self):
        """Test unknown report fields are rejected."""
        with pytest.raises(ValidationError):
            RunReport(command=[], unknown=1)
