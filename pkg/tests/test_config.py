import json
import logging

import pytest

from penney_perms.config import CACHE_DIR_VARIABLE, DEFAULTS, Settings


@pytest.fixture(autouse=True)
def no_cache_variable(monkeypatch):
    monkeypatch.delenv(CACHE_DIR_VARIABLE, raising=False)


def test_defaults():
    settings = Settings()
    assert settings.as_dict() == DEFAULTS
    assert settings.default_N == 11
    assert settings.ceiling_consecutive == 12
    assert settings.ceiling_vincular == 9
    assert settings.oracle_max_n == 8
    assert settings.cache_dir is None


def test_overrides_skip_none():
    settings = Settings(overrides={"workers": 4, "cache_dir": None, "default_N": 9})
    assert settings.workers == 4
    assert settings.default_N == 9
    assert settings.cache_dir is None


def test_unknown_override():
    with pytest.raises(ValueError):
        Settings(overrides={"trials": 10})


def test_workers_must_be_positive():
    with pytest.raises(ValueError):
        Settings(overrides={"workers": 0})


def test_overrides_beat_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(CACHE_DIR_VARIABLE, str(tmp_path))
    settings = Settings(overrides={"cache_dir": "elsewhere"})
    assert settings.cache_dir == "elsewhere"


def test_environment_beats_config_file(monkeypatch, tmp_path):
    path = tmp_path / "penney.json"
    path.write_text(json.dumps({"cache_dir": "from-file"}))
    monkeypatch.setenv(CACHE_DIR_VARIABLE, str(tmp_path))
    assert Settings(str(path)).cache_dir == str(tmp_path)
    assert Settings(str(path), {"cache_dir": None}).cache_dir == str(tmp_path)


def test_config_file(tmp_path, caplog):
    path = tmp_path / "penney.json"
    path.write_text(json.dumps({"mc_horizon": 32, "ceiling_consecutive": 10, "colour": "red"}))
    with caplog.at_level(logging.WARNING):
        settings = Settings(str(path), {"ceiling_consecutive": 11})
    assert settings.mc_horizon == 32
    assert settings.ceiling_consecutive == 11
    assert "colour" in caplog.text
    assert "colour" not in settings.as_dict()


def test_missing_config_file(tmp_path):
    with pytest.raises(ValueError):
        Settings(str(tmp_path / "missing.json"))
