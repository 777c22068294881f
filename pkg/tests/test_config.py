import logging

from verify.config import HnffSettings, get_settings


def test_defaults():
    settings = HnffSettings()
    assert settings.log_level == "WARNING"
    assert settings.log_file is None
    assert settings.max_jobs == 1
    assert settings.failure_limit == 20
    assert settings.svg_scale == 40
    assert settings.max_literal_digits == 64
    assert (settings.triple_max_rank, settings.triple_max_abs_slope) == (4, 2)


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HNFF_MAX_JOBS", "3")
    monkeypatch.setenv("HNFF_LOG_LEVEL", "debug")
    monkeypatch.setenv("HNFF_SVG_SCALE", "10")
    settings = HnffSettings()
    assert settings.max_jobs == 3
    assert settings.log_level == "DEBUG"
    assert settings.svg_scale == 10


def test_invalid_values_fall_back_with_warning(monkeypatch, caplog):
    monkeypatch.setenv("HNFF_MAX_JOBS", "0")
    monkeypatch.setenv("HNFF_FAILURE_LIMIT", "many")
    monkeypatch.setenv("HNFF_TRIPLE_MAX_ABS_SLOPE", "-1")
    with caplog.at_level(logging.WARNING, logger="verify.config"):
        settings = HnffSettings()
    assert settings.max_jobs == 1
    assert settings.failure_limit == 20
    assert settings.triple_max_abs_slope == 2
    assert "HNFF_MAX_JOBS" in caplog.text


def test_get_settings_is_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv("HNFF_MAX_JOBS", "4")
    assert get_settings() is first
    get_settings.cache_clear()
    assert get_settings().max_jobs == 4
