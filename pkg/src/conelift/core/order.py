"""
Orders used by the lift algorithms: per-coordinate upper bounds and the
sign-compatible divisibility relation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from conelift.core.vectors import IntVector
from conelift.exceptions import ArgumentError

_INFINITY_TOKENS = {"inf", "infinity", "∞"}


@dataclass(frozen=True)
class Bounds:
    """Upper bounds in Z+ ∪ {∞}; None stands for ∞."""

    limits: tuple[int | None, ...]

    def __post_init__(self) -> None:
        for x in self.limits:
            if x is None:
                continue
            if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                raise ArgumentError(f"Bounds must be non-negative integers or ∞, got {x!r}")

    @classmethod
    def unbounded(cls, n: int) -> Bounds:
        return cls((None,) * n)

    @classmethod
    def uniform(cls, n: int, limit: int) -> Bounds:
        return cls((limit,) * n)

    @classmethod
    def of(cls, values: Iterable[int | None]) -> Bounds:
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> Bounds:
        """Parse "1,1,inf" style bound lists."""
        limits: list[int | None] = []
        for token in text.split(","):
            token = token.strip()
            if token.lower() in _INFINITY_TOKENS:
                limits.append(None)
                continue
            try:
                limits.append(int(token))
            except ValueError as e:
                raise ArgumentError(f"Invalid bound '{token}'") from e
        return cls(tuple(limits))

    def __len__(self) -> int:
        return len(self.limits)

    @property
    def is_finite(self) -> bool:
        return all(x is not None for x in self.limits)

    def allows(self, i: int, value: int) -> bool:
        cap = self.limits[i]
        return cap is None or value <= cap

    def admits(self, v: Sequence[int]) -> bool:
        """Componentwise v <= limits (∞ absorbing)."""
        if len(v) != len(self.limits):
            raise ArgumentError(f"Dimension mismatch: {len(v)} != {len(self.limits)}")
        return all(cap is None or a <= cap for a, cap in zip(v, self.limits))

    def permuted(self, col_perm: Sequence[int]) -> Bounds:
        """Reorder input-order bounds into working column order."""
        return Bounds(tuple(self.limits[c] for c in col_perm))

    def restricted(self, cols: Sequence[int]) -> Bounds:
        return Bounds(tuple(self.limits[c] for c in cols))

    def tightened(self, new_limits: Sequence[int]) -> Bounds:
        """Componentwise minimum with finite new limits."""
        if len(new_limits) != len(self.limits):
            raise ArgumentError("Dimension mismatch while tightening bounds")
        return Bounds(
            tuple(b if a is None else min(a, b) for a, b in zip(self.limits, new_limits))
        )

    def render(self) -> str:
        return ",".join("inf" if x is None else str(x) for x in self.limits)


def sign_divides(u: IntVector, v: IntVector, j1: int) -> bool:
    """
    u ⊑_{j1} v: u ≤ v on the first j1-1 coordinates, and the last
    coordinates share a sign with |u_last| ≤ |v_last|.
    """
    if len(u) != j1 or len(v) != j1:
        raise ArgumentError(f"sign_divides expects vectors of dimension {j1}")
    for i in range(j1 - 1):
        if u[i] > v[i]:
            return False
    a, b = u[j1 - 1], v[j1 - 1]
    return a * b >= 0 and abs(a) <= abs(b)
