import pytest

from penney_perms.config import Settings
from penney_perms.enumeration import CountCache, PatternCounter


@pytest.fixture
def settings(tmp_path, monkeypatch):
    monkeypatch.delenv("PENNEY_PERMS_CACHE_DIR", raising=False)
    return Settings(overrides={"cache_dir": str(tmp_path / "cache")})


@pytest.fixture
def counter(settings):
    return PatternCounter(settings, CountCache(settings.cache_dir))


@pytest.fixture(scope="session")
def shared_counter(tmp_path_factory):
    # session-wide counter for the slower race tables
    directory = tmp_path_factory.mktemp("shared_cache")
    settings = Settings(overrides={"cache_dir": str(directory)})
    return PatternCounter(settings, CountCache(settings.cache_dir))
