"""
Completion for ray stages: last-coordinate cancelling S-vectors, support
normal forms and a support-ordered pending queue.
"""
from __future__ import annotations

import heapq
from itertools import count
from typing import Iterable, Sequence

from conelift.core.vectors import scale, add
from conelift.logging_config import logger
from conelift.rays.elements import RayElement, dedupe_rays


def s_vector_ray(f: RayElement, g: RayElement) -> RayElement | None:
    """|g'|·f + |f'|·g when the last coordinates have strictly opposite signs."""
    fl, gl = f.stage_lift[-1], g.stage_lift[-1]
    if fl * gl >= 0:
        return None
    return RayElement.from_lift(add(scale(abs(gl), f.lift), scale(abs(fl), g.lift)), f.cols)


def _min_ratio(sv: Sequence[int], gv: Sequence[int]) -> tuple[int, int]:
    """(a, b) with a/b = min |s_i|/|g_i| over g_i != 0, compared exactly."""
    best: tuple[int, int] | None = None
    for x, y in zip(sv, gv):
        if not y:
            continue
        if best is None or abs(x) * best[1] < best[0] * abs(y):
            best = (abs(x), abs(y))
    assert best is not None
    return best


def normal_form_ray(s: RayElement, G: Sequence[RayElement]) -> RayElement | None:
    """
    Subtract support divisors until none is left; None stands for zero.

    Each step removes the largest multiple α·g keeping s in the cone, which
    zeroes at least one coordinate of supp(g), so the support shrinks.
    """
    current: RayElement | None = s
    while current is not None:
        divisor = next((g for g in G if g.support_divides(current)), None)
        if divisor is None:
            break
        a, b = _min_ratio(current.stage_lift, divisor.stage_lift)
        reduced = RayElement.from_lift(
            add(scale(b, current.lift), scale(-a, divisor.lift)), current.cols
        )
        if reduced is not None:
            assert reduced.support_size < current.support_size
        current = reduced
    return current


def complete_ray(F: Iterable[RayElement]) -> list[RayElement]:
    """
    Completion loop for rays; the result contains (a primitive multiple of)
    every extreme ray of K̄⁺ ∪ K̄⁻. Pending S-vectors leave the queue in order
    of increasing support size.
    """
    G = dedupe_rays(F)
    tie = count()
    heap: list[tuple[tuple[int, tuple[int, ...]], int, RayElement]] = []

    def push(candidate: RayElement | None) -> None:
        if candidate is not None:
            heapq.heappush(heap, (candidate.sort_key(), next(tie), candidate))

    for i, f in enumerate(G):
        for g in G[i + 1:]:
            push(s_vector_ray(f, g))

    popped = 0
    while heap:
        _, _, s = heapq.heappop(heap)
        popped += 1
        r = normal_form_ray(s, G)
        if r is None:
            continue
        for g in G:
            push(s_vector_ray(r, g))
        G.append(r)

    logger.debug("Ray completion processed %d S-vectors, |G|=%d", popped, len(G))
    return G


def minimize_rays(elements: Iterable[RayElement | None]) -> list[RayElement]:
    """Keep the elements whose support contains no other element's support."""
    pool = dedupe_rays(elements)
    pool.sort(key=RayElement.sort_key)
    kept: list[RayElement] = []
    for e in pool:
        if not any(
            k.support_divides(e) and k.support_size < e.support_size for k in kept
        ):
            kept.append(e)
    return kept
