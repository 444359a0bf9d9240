"""
Brute-force reference computations for desk-scale validation.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

from conelift.config import DEFAULTS, ORACLE_MAX_RAY_DIMENSION
from conelift.core.lattice import triangularize
from conelift.core.rational import nullspace
from conelift.core.vectors import IntMatrix, IntVector, leq, primitive, sub
from conelift.exceptions import ArgumentError, ResourceLimitError

DEFAULT_BUDGET = int(DEFAULTS["CONELIFT_ORACLE_BUDGET"])


def _box_points(
    generators: IntMatrix, box: int, budget: int | None
) -> list[IntVector]:
    """All lattice points z with 0 <= z <= box, in input column order."""
    basis = triangularize(generators)
    n, s = basis.n, basis.s
    found: list[IntVector] = []
    visited = 0

    def descend(i: int, z: list[int]) -> None:
        nonlocal visited
        visited += 1
        if budget is not None and visited > budget:
            raise ResourceLimitError(f"Enumeration budget of {budget} nodes exceeded")
        if i == s:
            if all(0 <= a <= box for a in z[s:]):
                found.append(basis.from_working(tuple(z)))
            return
        row = basis.rows[i]
        p = row[i]
        lo = -(z[i] // p)
        hi = (box - z[i]) // p
        for c in range(lo, hi + 1):
            descend(i + 1, [a + c * b for a, b in zip(z, row)] if c else z)

    descend(0, [0] * n)
    return found


def brute_hilbert(
    generators: IntMatrix, box: int, budget: int | None = DEFAULT_BUDGET
) -> list[IntVector]:
    """
    Minimal generators of Λ ∩ [0, box]ⁿ: the nonzero box points with no
    smaller nonzero box point below them (z = y + (z - y) otherwise).
    """
    if box < 1:
        raise ArgumentError("Box must be a positive integer")
    points = [z for z in _box_points(generators, box, budget) if any(z)]
    points.sort(key=lambda z: (sum(z), z))
    minimal: list[IntVector] = []
    for z in points:
        if not any(leq(m, z) for m in minimal):
            minimal.append(z)
    return sorted(minimal)


def brute_rays(
    generators: IntMatrix, max_dimension: int = ORACLE_MAX_RAY_DIMENSION
) -> list[IntVector]:
    """
    Extreme rays of span(rows) ∩ ℝ₊ⁿ by scanning supports: a support S gives
    a ray when the span restricted to S is a line through a vector that is
    positive exactly on S.
    """
    n = generators.ncols
    if n > max_dimension:
        raise ResourceLimitError(
            f"Ray oracle limited to dimension {max_dimension}, got {n}"
        )
    equations = nullspace(generators)
    rays: set[IntVector] = set()
    for size in range(1, n + 1):
        for support in combinations(range(n), size):
            outside = [
                tuple(int(k == i) for k in range(n)) for i in range(n) if i not in support
            ]
            system = IntMatrix(tuple(equations) + tuple(outside), n)
            solutions = nullspace(system)
            if len(solutions) != 1:
                continue
            v = solutions[0]
            if all(a <= 0 for a in v):
                v = tuple(-a for a in v)
            exact = all((a > 0) == (i in support) for i, a in enumerate(v))
            if exact and all(a >= 0 for a in v):
                rays.add(primitive(v))
    return sorted(rays)


def check_decomposition(H: Iterable[IntVector], z: IntVector) -> bool:
    """
    Can z be written as a sum of elements of H? Greedy in lexicographic
    order, backtracking (with a memo of dead remainders) when a path fails.
    """
    if any(a < 0 for a in z):
        raise ArgumentError("Target must be non-negative")
    elements = sorted(h for h in set(H) if any(h))
    dead: set[IntVector] = set()
    stack: list[IntVector] = [tuple(z)]
    while stack:
        rest = stack.pop()
        if not any(rest):
            return True
        if rest in dead:
            continue
        dead.add(rest)
        for h in reversed(elements):
            if leq(h, rest):
                stack.append(sub(rest, h))
    return False
