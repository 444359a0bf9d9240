"""
Value sources for settings lookup.

A ValueSource layers several mappings (e.g. explicit overrides over
os.environ); the first layer holding a key wins. Empty strings count as
unset so `CONELIFT_STRATEGY=` in a .env file falls back to the default.
"""
from typing import Any, Iterator, Mapping


class ValueSource:
    def __init__(self, *layers: Mapping[str, Any]):
        self._layers = layers

    def _lookup(self, key: str) -> Iterator[Any]:
        for layer in self._layers:
            value = layer.get(key)
            if value is not None and value != "":
                yield value

    def has(self, key: str) -> bool:
        return next(self._lookup(key), None) is not None

    def get(self, key: str) -> Any:
        return next(self._lookup(key), None)

    def keys(self) -> set[str]:
        out: set[str] = set()
        for layer in self._layers:
            out.update(layer.keys())
        return out
