"""
Column selection strategies for lift stages past the pivot columns.

Once every pivot column is lifted, the remaining columns may be lifted in any
order; the order changes intermediate set sizes but not the final result.
"""
from __future__ import annotations

from typing import Callable, Protocol, Sequence

from conelift.core.vectors import IntVector
from conelift.exceptions import RegistryConflictError, UnknownStrategyError


class ColumnStrategy(Protocol):
    def __call__(self, current: Sequence[IntVector], remaining: Sequence[int]) -> int: ...


_STRATEGIES: dict[str, ColumnStrategy] = {}


def register_strategy(name: str) -> Callable[[ColumnStrategy], ColumnStrategy]:
    """
    Decorator registering a strategy under a case-insensitive key.

    Idempotent for the same callable; raises if another object reuses the name.
    """
    def decorator(fn: ColumnStrategy) -> ColumnStrategy:
        key = name.lower()
        existing = _STRATEGIES.get(key)
        if existing is not None and existing is not fn:
            raise RegistryConflictError(f"Column strategy '{name}' already registered.")
        _STRATEGIES[key] = fn
        return fn
    return decorator


def get_strategy(name: str) -> ColumnStrategy:
    try:
        return _STRATEGIES[name.lower()]
    except KeyError as e:
        raise UnknownStrategyError(
            f"Unknown column strategy '{name}'. Available={list_strategies()}"
        ) from e


def list_strategies() -> list[str]:
    return list(_STRATEGIES.keys())


@register_strategy("input-order")
def input_order(current: Sequence[IntVector], remaining: Sequence[int]) -> int:
    return remaining[0]


@register_strategy("min-pairs")
def min_pairs(current: Sequence[IntVector], remaining: Sequence[int]) -> int:
    """Fewest opposite-sign pairs among the lift coordinates."""
    def pairs(col: int) -> int:
        pos = sum(1 for v in current if v[col] > 0)
        neg = sum(1 for v in current if v[col] < 0)
        return pos * neg

    return min(remaining, key=pairs)


@register_strategy("max-zeros")
def max_zeros(current: Sequence[IntVector], remaining: Sequence[int]) -> int:
    """Most zero lift coordinates."""
    return max(remaining, key=lambda col: sum(1 for v in current if v[col] == 0))
