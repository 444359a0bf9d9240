"""
Ray-stage elements. Rays are scale-free, so every element is stored through
a primitive integral representative.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from conelift.core.vectors import IntVector, content, primitive
from conelift.exceptions import ArgumentError


def canonicalize_ray(v: IntVector) -> IntVector:
    """Divide by the (positive) gcd of the entries; the sign is kept."""
    if not any(v):
        raise ArgumentError("Cannot canonicalize the zero vector as a ray")
    return primitive(v)


@dataclass(frozen=True)
class RayElement:
    """
    Stage element (prefix, last) of K̄⁺ ∪ K̄⁻ in primitive form.

    `lift` is a primitive full working-order vector of the span whose
    coordinates at `cols` are a positive multiple of prefix + (last,).
    """

    prefix: IntVector
    last: int
    lift: IntVector = field(compare=False, repr=False, default=())
    cols: tuple[int, ...] = field(compare=False, repr=False, default=())
    support: frozenset[int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.prefix):
            raise ArgumentError(f"Prefix entries must be non-negative: {self.prefix}")
        object.__setattr__(
            self, "support", frozenset(i for i, a in enumerate(self.prefix) if a)
        )

    @classmethod
    def from_lift(cls, lift: IntVector, cols: Sequence[int]) -> RayElement | None:
        """Element read off a full vector at the stage columns; None if zero there."""
        stage = tuple(lift[c] for c in cols)
        if not any(stage):
            return None
        g = content(stage)
        return cls(
            tuple(a // g for a in stage[:-1]), stage[-1] // g, primitive(lift), tuple(cols)
        )

    @classmethod
    def of(cls, prefix: Sequence[int], last: int) -> RayElement:
        """Standalone element whose lift is its own stage vector."""
        v = tuple(prefix) + (last,)
        element = cls.from_lift(v, tuple(range(len(v))))
        if element is None:
            raise ArgumentError("Ray elements must be nonzero")
        return element

    @property
    def vector(self) -> IntVector:
        return self.prefix + (self.last,)

    @property
    def stage_lift(self) -> IntVector:
        return tuple(self.lift[c] for c in self.cols)

    @property
    def support_size(self) -> int:
        return len(self.support) + (self.last != 0)

    def support_divides(self, other: RayElement) -> bool:
        """supp(self) ⊆ supp(other), the last coordinate sign-consistently."""
        if self.last and self.last * other.last <= 0:
            return False
        return self.support <= other.support

    def sort_key(self) -> tuple[int, IntVector]:
        return self.support_size, self.vector


def dedupe_rays(elements: Iterable[RayElement | None]) -> list[RayElement]:
    seen: set[RayElement] = set()
    out: list[RayElement] = []
    for e in elements:
        if e is not None and e not in seen:
            seen.add(e)
            out.append(e)
    return out
