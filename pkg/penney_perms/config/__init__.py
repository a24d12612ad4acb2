from .settings import Settings, DEFAULTS, CACHE_DIR_VARIABLE

__all__ = ["Settings", "DEFAULTS", "CACHE_DIR_VARIABLE"]
