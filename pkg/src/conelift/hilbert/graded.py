"""
Reduction-free graded lift step.

Minimal elements are produced level by level in the 1-norm of the prefix.
A candidate at level k+1 that is not sign-divided by anything already
accepted is itself minimal, so no normal forms are ever computed. Once the
levels above the largest nonempty level k are empty up to 2k (and every
input element has been absorbed), no further minimal elements exist.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

from conelift.core.order import Bounds
from conelift.hilbert.completion import s_vector_hb
from conelift.hilbert.elements import GradedSet, SignedElement
from conelift.logging_config import logger


def _admissible(candidate: SignedElement, pivot: int | None) -> bool:
    return pivot is None or abs(candidate.last) < pivot


def _pair_sums(
    graded: GradedSet, alpha: int, beta: int, bounds: Bounds
) -> list[SignedElement]:
    out: list[SignedElement] = []
    left = graded.bucket(alpha)
    right = graded.bucket(beta)
    for i, f in enumerate(left):
        partners = right[i + 1:] if alpha == beta else right
        for g in partners:
            s = s_vector_hb(f, g, bounds)
            if s is not None:
                out.append(s)
    return out


def _close_under_level_zero(
    candidates: Iterable[SignedElement], level_zero: Sequence[SignedElement]
) -> list[SignedElement]:
    out: list[SignedElement] = []
    for c in candidates:
        out.append(c)
        for z in level_zero:
            if z.last * c.last < 0:
                out.append(c.plus(z))
    return out


def _candidates(
    graded: GradedSet,
    level: int,
    inputs: Sequence[SignedElement],
    bounds: Bounds,
    pool: ThreadPoolExecutor | None,
) -> list[SignedElement]:
    pairs = [(a, level - a) for a in range(1, level // 2 + 1)]
    if pool is not None and len(pairs) > 1:
        chunks = list(pool.map(lambda ab: _pair_sums(graded, ab[0], ab[1], bounds), pairs))
    else:
        chunks = [_pair_sums(graded, a, b, bounds) for a, b in pairs]
    raw = list(inputs)
    for chunk in chunks:
        raw.extend(chunk)
    raw = _close_under_level_zero(raw, graded.bucket(0))
    unique = {c for c in raw if _admissible(c, graded.pivot)}
    return sorted(unique, key=SignedElement.sort_key)


def _stop_reached(level: int, graded: GradedSet, max_input_level: int) -> bool:
    k = max(graded.max_nonempty, max_input_level, 1)
    return level >= 2 * k


def graded_step_hb(
    F: Iterable[SignedElement],
    pivot: int | None,
    bounds: Bounds,
    threads: int = 1,
) -> GradedSet:
    """
    Compute H⁺ ∪ H⁻ of one stage from its input set F.

    pivot is the diagonal entry of the next generator row, or None (∞) once
    the lift coordinate is determined uniquely. bounds are the prefix bounds.
    """
    graded = GradedSet(pivot=pivot, bounds=bounds)
    by_level: dict[int, list[SignedElement]] = {}
    for f in F:
        if f.is_zero:
            continue
        by_level.setdefault(f.level, []).append(f)
    max_input_level = max(by_level) if by_level else 0

    for z in sorted(set(by_level.pop(0, [])), key=SignedElement.sort_key):
        if not graded.divided(z, 0):
            graded.add(z)
    graded.processed_level = 0

    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        level = 0
        while not _stop_reached(level, graded, max_input_level):
            level += 1
            accepted = 0
            for c in _candidates(graded, level, by_level.get(level, []), bounds, pool):
                if not graded.divided(c, level):
                    graded.add(c)
                    accepted += 1
            graded.processed_level = level
            logger.debug("Level %d: %d minimal elements", level, accepted)
    finally:
        if pool is not None:
            pool.shutdown()

    graded.stop_level = max(graded.max_nonempty, max_input_level, 1)
    logger.debug(
        "Stopping rule fired after level %d (k=%d)", graded.processed_level, graded.stop_level
    )
    return graded


def stop_rule_violations(graded: GradedSet) -> list[SignedElement]:
    """
    Exhaustively form every S-vector candidate at levels above the stopping
    level (up to twice it) and return those not sign-divided by an accepted
    element. An empty list means the early stop lost nothing.
    """
    if graded.stop_level is None:
        return []
    k = graded.stop_level
    elements = graded.elements()
    level_zero = graded.bucket(0)
    found: list[SignedElement] = []
    for i, f in enumerate(elements):
        for g in elements[i + 1:]:
            s = s_vector_hb(f, g, graded.bounds)
            if s is None:
                continue
            for c in _close_under_level_zero([s], level_zero):
                if not k < c.level <= 2 * k or not _admissible(c, graded.pivot):
                    continue
                if not any(e.divides(c) for e in elements):
                    found.append(c)
    return found
