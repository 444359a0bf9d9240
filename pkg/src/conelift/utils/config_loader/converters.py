"""
Conversion pipeline for raw configuration values.

ConverterRegistry executes a chain of converter functions in order.
Custom converters can be registered before or after the default one.

Numeric strings like "1" or "0" are NOT treated as booleans; boolean
recognition is limited to true/on/yes and false/off/no.
"""
from __future__ import annotations

import re
from typing import Any, Callable, List

_BOOL_TRUE = {"true", "on", "yes"}
_BOOL_FALSE = {"false", "off", "no"}
_UNBOUNDED = {"inf", "infinity", "none", "unlimited"}

_INT = re.compile(r"-?[0-9][0-9_]*")


def default_parse(value: Any) -> Any:
    """
    Default heuristic parsing:
      - non-strings are returned as-is
      - booleans: true/on/yes, false/off/no
      - inf/infinity/none/unlimited -> None (no limit)
      - integers, underscores allowed ("10_000_000")
      - comma or semicolon separated lists
      - anything else stays a string (strategy and engine names)
    """
    if not isinstance(value, str):
        return value

    raw = value.strip()
    low = raw.lower()

    if low in _BOOL_TRUE:
        return True
    if low in _BOOL_FALSE:
        return False
    if low in _UNBOUNDED:
        return None

    if _INT.fullmatch(raw):
        return int(raw.replace("_", ""))

    if "," in raw or ";" in raw:
        parts = re.split(r"[;,]", raw)
        return [default_parse(p) for p in (q.strip() for q in parts) if p]

    return raw


class ConverterRegistry:
    """Ordered chain of value -> value converters."""

    def __init__(self) -> None:
        self._chain: List[Callable[[Any], Any]] = [default_parse]

    def register_front(self, fn: Callable[[Any], Any]) -> None:
        """Register a converter that runs first."""
        self._chain.insert(0, fn)

    def register_back(self, fn: Callable[[Any], Any]) -> None:
        """Register a converter that runs last."""
        self._chain.append(fn)

    def convert(self, raw: Any) -> Any:
        out = raw
        for fn in self._chain:
            out = fn(out)
        return out
