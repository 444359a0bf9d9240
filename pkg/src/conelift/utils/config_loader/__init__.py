"""
Settings loading toolkit.

Public API:
    - ConfigLoader        High-level entry point
    - ConverterRegistry   Register custom conversion functions
    - ValueSource         Layered lookup over mappings
"""
from .converters import ConverterRegistry, default_parse
from .loader import ConfigLoader
from .sources import ValueSource

__all__ = [
    "ConfigLoader",
    "ConverterRegistry",
    "ValueSource",
    "default_parse",
]
