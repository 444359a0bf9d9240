"""
Generic completion for one lift stage: S-vectors, normal forms and the
queue-driven completion loop, plus the minimization filter that turns the
completed set into H⁺ ∪ H⁻.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from conelift.core.order import Bounds
from conelift.hilbert.elements import SignedElement, dedupe, within_prefix_bounds
from conelift.logging_config import logger


def s_vector_hb(
    f: SignedElement, g: SignedElement, bounds: Bounds | None = None
) -> SignedElement | None:
    """
    Sum of f and g when their last coordinates have strictly opposite signs.

    With bounds, the prefix sum must stay below the first j limits; the lift
    coordinate is bounded only when a stage result is extracted.
    """
    if f.last * g.last >= 0:
        return None
    candidate = f.plus(g)
    if bounds is not None and not within_prefix_bounds(candidate, bounds):
        return None
    return candidate


def _reduction_factor(s: SignedElement, g: SignedElement) -> int:
    ratios = [a // b for a, b in zip(s.prefix, g.prefix) if b]
    if g.last:
        ratios.append(abs(s.last) // abs(g.last))
    return min(ratios)


def normal_form_hb(s: SignedElement, G: Sequence[SignedElement]) -> SignedElement:
    """
    Reduce s by sign-compatible divisors from G until none divides it.

    G is scanned in order and the first divisor wins. Each step subtracts the
    largest multiple that keeps every coordinate sign-consistent.
    """
    current = s
    while not current.is_zero:
        divisor = next((g for g in G if not g.is_zero and g.divides(current)), None)
        if divisor is None:
            break
        alpha = _reduction_factor(current, divisor)
        reduced = current.minus(alpha, divisor)
        assert reduced.level + abs(reduced.last) < current.level + abs(current.last)
        current = reduced
    return current


def complete_hb(
    F: Iterable[SignedElement], bounds: Bounds | None = None
) -> list[SignedElement]:
    """
    Completion loop: returns G ⊇ H⁺ ∪ H⁻ for the stage input F.

    The pending set C is a FIFO queue seeded with every S-vector of F.
    """
    G = dedupe(F)
    queue: deque[SignedElement] = deque()
    for i, f in enumerate(G):
        for g in G[i + 1:]:
            s = s_vector_hb(f, g, bounds)
            if s is not None:
                queue.append(s)

    popped = 0
    while queue:
        s = queue.popleft()
        popped += 1
        r = normal_form_hb(s, G)
        if r.is_zero:
            continue
        for g in G:
            t = s_vector_hb(r, g, bounds)
            if t is not None:
                queue.append(t)
        G.append(r)

    logger.debug("Completion processed %d S-vectors, |G|=%d", popped, len(G))
    return G


def minimize_hb(elements: Iterable[SignedElement]) -> list[SignedElement]:
    """Drop zero elements and those sign-divided by another element."""
    pool = [e for e in dedupe(elements) if not e.is_zero]
    pool.sort(key=lambda e: (e.level, abs(e.last), e.vector))
    kept: list[SignedElement] = []
    for e in pool:
        if not any(k.divides(e) for k in kept):
            kept.append(e)
    return kept
