from .formatter import (
    FORMATTERS,
    CsvFormatter,
    DotFormatter,
    Formatter,
    JsonFormatter,
    TableFormatter,
    get_formatter,
)

__all__ = [
    "FORMATTERS",
    "CsvFormatter",
    "DotFormatter",
    "Formatter",
    "JsonFormatter",
    "TableFormatter",
    "get_formatter",
]
