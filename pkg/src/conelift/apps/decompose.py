"""
Decomposition of a kernel point into Hilbert basis elements.

The truncated basis is computed with the target itself as upper bounds. As
soon as a stage element (past the pivot columns, where lifts are unique)
extends to a full non-negative vector below the current target, it is
subtracted, the bounds shrink to the remainder and the stage set is pruned.
The lift then simply continues under the tighter bounds.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace

from conelift.core.lattice import integer_kernel
from conelift.core.order import Bounds
from conelift.core.vectors import IntMatrix, IntVector, is_nonnegative, leq, sub
from conelift.exceptions import ArgumentError, ComputationError
from conelift.hilbert.lift import HilbertLifter, LiftState
from conelift.logging_config import logger


@dataclass(frozen=True)
class Decomposition:
    """Terms (element, multiplicity) sorted by element."""

    terms: tuple[tuple[IntVector, int], ...]

    @classmethod
    def from_counts(cls, counts: Counter[IntVector]) -> Decomposition:
        return cls(tuple(sorted((v, m) for v, m in counts.items() if m > 0)))

    def total(self, n: int) -> IntVector:
        out = [0] * n
        for v, m in self.terms:
            for i, a in enumerate(v):
                out[i] += m * a
        return tuple(out)

    def __len__(self) -> int:
        return len(self.terms)


def _finite(bounds: Bounds) -> IntVector:
    assert bounds.is_finite
    return tuple(x for x in bounds.limits if x is not None)


class _Subtractor:
    """Stage hook that peels fitting full vectors off the remaining target."""

    def __init__(self) -> None:
        self.counts: Counter[IntVector] = Counter()

    def __call__(self, state: LiftState) -> LiftState:
        if state.j < state.basis.s:
            return state
        remainder = _finite(state.bounds)
        changed = False
        for v in state.current:
            while is_nonnegative(v) and any(v) and leq(v, remainder):
                remainder = sub(remainder, v)
                self.counts[state.basis.from_working(v)] += 1
                changed = True
                logger.info(
                    "Subtracted %s at stage %d", state.basis.from_working(v), state.j
                )
        if not changed:
            return state
        bounds = state.bounds.tightened(remainder)
        prefix_bounds = bounds.restricted(state.order)
        current = tuple(v for v in state.current if prefix_bounds.admits(state.prefix(v)))
        return replace(state, bounds=bounds, current=current)


def decompose(
    A: IntMatrix,
    u: IntVector,
    strategy: str = "input-order",
    engine: str = "graded",
    threads: int = 1,
) -> Decomposition:
    """Write u ∈ ker(A) ∩ ℤ₊ⁿ as a non-negative combination of Hilbert elements."""
    if len(u) != A.ncols:
        raise ArgumentError(f"Target has {len(u)} entries, expected {A.ncols}")
    if not is_nonnegative(u):
        raise ArgumentError("Target must be non-negative")
    if any(A.apply(u)):
        raise ArgumentError("Target is not in the kernel of A")
    if not any(u):
        return Decomposition(())

    hook = _Subtractor()
    lifter = HilbertLifter(
        integer_kernel(A),
        bounds=Bounds(tuple(u)),
        strategy=strategy,
        engine=engine,
        threads=threads,
        on_stage=hook,
    )
    state = hook(lifter.start())
    while not state.done:
        state = lifter.advance(state)

    remainder = state.basis.from_working(_finite(state.bounds))
    for h in lifter.finish(state):
        while any(remainder) and leq(h, remainder):
            remainder = sub(remainder, h)
            hook.counts[h] += 1
    if any(remainder):
        raise ComputationError(f"Remainder {remainder} does not decompose")
    return Decomposition.from_counts(hook.counts)
