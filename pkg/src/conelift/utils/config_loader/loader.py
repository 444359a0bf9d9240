"""
Public facade:

    loader = ConfigLoader(os.environ)
    settings = loader.build(LiftSettings, prefix="CONELIFT_", name="lift settings")

Overrides (e.g. values given on the command line) are layered on top of the
base mapping.
"""
from __future__ import annotations

from typing import Any, Mapping, Type

from .builder import SettingsBuilder
from .converters import ConverterRegistry
from .sources import ValueSource


class ConfigLoader:
    def __init__(
        self,
        config: Mapping[str, Any],
        converters: ConverterRegistry | None = None,
        overrides: Mapping[str, Any] | None = None,
    ):
        self.source = ValueSource(overrides or {}, config)
        self.converters = converters or ConverterRegistry()
        self._builder = SettingsBuilder(self.source, self.converters)

    def build(self, cls: Type, prefix: str, name: str) -> Any:
        """Build an object from the constructor parameters found under prefix."""
        return self._builder.build(cls, prefix, name)
