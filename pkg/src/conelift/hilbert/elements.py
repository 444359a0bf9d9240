"""
Lift-stage elements and the level-bucketed set used by the graded step.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from conelift.core.order import Bounds
from conelift.core.vectors import IntVector, sub, scale
from conelift.exceptions import ArgumentError


@dataclass(frozen=True)
class SignedElement:
    """
    A stage element (prefix, last) of K⁺ ∪ K⁻.

    `lift` is a full working-order lattice vector whose lifted coordinates are
    prefix + (last,); it travels with the element so later coordinates are
    read off instead of solved for. Equality ignores it.
    """

    prefix: IntVector
    last: int
    lift: IntVector = field(compare=False, repr=False, default=())
    level: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.prefix):
            raise ArgumentError(f"Prefix entries must be non-negative: {self.prefix}")
        object.__setattr__(self, "level", sum(self.prefix))

    @property
    def j1(self) -> int:
        return len(self.prefix) + 1

    @property
    def sign(self) -> int:
        return (self.last > 0) - (self.last < 0)

    @property
    def is_zero(self) -> bool:
        return self.last == 0 and not any(self.prefix)

    @property
    def vector(self) -> IntVector:
        return self.prefix + (self.last,)

    def divides(self, other: SignedElement) -> bool:
        """self ⊑ other (same stage)."""
        if self.last * other.last < 0 or abs(self.last) > abs(other.last):
            return False
        return all(a <= b for a, b in zip(self.prefix, other.prefix))

    def plus(self, other: SignedElement) -> SignedElement:
        return SignedElement(
            tuple(a + b for a, b in zip(self.prefix, other.prefix)),
            self.last + other.last,
            tuple(a + b for a, b in zip(self.lift, other.lift)),
        )

    def minus(self, alpha: int, other: SignedElement) -> SignedElement:
        """self - alpha * other; caller guarantees the prefix stays >= 0."""
        return SignedElement(
            tuple(a - alpha * b for a, b in zip(self.prefix, other.prefix)),
            self.last - alpha * other.last,
            sub(self.lift, scale(alpha, other.lift)) if self.lift else (),
        )

    def sort_key(self) -> tuple[int, IntVector]:
        return abs(self.last), self.vector


def within_prefix_bounds(element: SignedElement, bounds: Bounds) -> bool:
    """Prefix check against the first j bounds (lift coordinate not tested)."""
    return all(
        cap is None or a <= cap for a, cap in zip(element.prefix, bounds.limits)
    )


@dataclass
class GradedSet:
    """
    Minimal elements of one lift stage, bucketed by prefix 1-norm.

    stop_level is the largest nonempty level once the stopping rule fired;
    pivot (None for ∞) and bounds are kept for post-hoc checks.
    """

    pivot: int | None
    bounds: Bounds
    buckets: dict[int, list[SignedElement]] = field(default_factory=dict)
    stop_level: int | None = None
    processed_level: int = -1

    def add(self, element: SignedElement) -> None:
        self.buckets.setdefault(element.level, []).append(element)

    def bucket(self, level: int) -> list[SignedElement]:
        return self.buckets.get(level, [])

    @property
    def max_nonempty(self) -> int:
        levels = [k for k, items in self.buckets.items() if items]
        return max(levels) if levels else -1

    def upto(self, level: int) -> Iterator[SignedElement]:
        for k in sorted(self.buckets):
            if k > level:
                break
            yield from self.buckets[k]

    def elements(self) -> list[SignedElement]:
        return list(self.upto(self.max_nonempty))

    def divided(self, candidate: SignedElement, level: int) -> bool:
        """Is candidate sign-divided by an accepted element of level <= level?"""
        return any(g.divides(candidate) for g in self.upto(level))

    def __len__(self) -> int:
        return sum(len(items) for items in self.buckets.values())


def dedupe(elements: Iterable[SignedElement]) -> list[SignedElement]:
    seen: set[SignedElement] = set()
    out: list[SignedElement] = []
    for e in elements:
        if e not in seen:
            seen.add(e)
            out.append(e)
    return out
