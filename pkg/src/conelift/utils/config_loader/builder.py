"""
SettingsBuilder coordinates:
  - signature introspection of the target class
  - raw value lookup under a prefix
  - conversion
  - basic primitive type enforcement, so errors surface before instantiation
"""
from __future__ import annotations

import inspect
import types
from typing import Any, Dict, Type, Union, get_args, get_origin, get_type_hints

from conelift.exceptions import ConfigValidationError
from conelift.logging_config import logger

from .converters import ConverterRegistry
from .sources import ValueSource

_PRIMITIVES = (int, str, bool)


def _unwrap_optional(hint: Any) -> tuple[Any, bool]:
    """(inner type, allows None) for `X | None`; (hint, False) otherwise."""
    if get_origin(hint) in (Union, types.UnionType):
        args = get_args(hint)
        inner = [a for a in args if a is not type(None)]
        if len(inner) == 1:
            return inner[0], len(inner) != len(args)
    return hint, False


def _coerce(value: Any, hint: Any) -> Any:
    expected, nullable = _unwrap_optional(hint)
    if value is None:
        if nullable:
            return None
        raise TypeError("value may not be unlimited")
    if expected not in _PRIMITIVES or isinstance(value, expected):
        if expected is int and isinstance(value, bool):
            raise TypeError("expected int, got bool")
        return value
    if expected is bool:
        raise TypeError("expected a boolean literal")
    if expected is str:
        return str(value)
    return expected(value)


class SettingsBuilder:
    """
    Builds a settings-like class by inspecting its constructor (dataclass or
    plain class) and resolving parameters from a ValueSource.
    """

    def __init__(self, source: ValueSource, converters: ConverterRegistry):
        self.source = source
        self.converters = converters

    def _collect(self, cls: Type, prefix: str, label: str) -> Dict[str, Any]:
        params = inspect.signature(cls).parameters
        hints = get_type_hints(cls)
        resolved: dict[str, Any] = {}
        errors: list[str] = []

        for pname, param in params.items():
            key = f"{prefix}{pname.upper()}"
            if not self.source.has(key):
                if param.default is inspect.Parameter.empty:
                    errors.append(f"Missing required '{key}'")
                else:
                    resolved[pname] = param.default
                    logger.debug(
                        "Config '%s' not set for %s, using default=%r",
                        key,
                        label,
                        param.default,
                    )
                continue
            try:
                value = self.converters.convert(self.source.get(key))
                resolved[pname] = _coerce(value, hints.get(pname, Any))
            except Exception as e:
                errors.append(f"Invalid value for '{key}': {e}")

        if errors:
            raise ConfigValidationError(f"Errors building {label}: " + "; ".join(errors))
        return resolved

    def build(self, cls: Type, prefix: str, label: str) -> Any:
        """Instantiate cls with resolved and validated arguments."""
        values = self._collect(cls, prefix, label)
        try:
            return cls(**values)
        except ConfigValidationError:
            raise
        except Exception as e:
            raise ConfigValidationError(f"Invalid configuration for {label}: {e}") from e
