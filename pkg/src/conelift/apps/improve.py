"""
Augmentation step for 0-1 programs min{c·z : Az = b, z ∈ {0,1}ⁿ}.
"""
from __future__ import annotations

from dataclasses import dataclass

from conelift.core.lattice import integer_kernel
from conelift.core.order import Bounds
from conelift.core.vectors import IntMatrix, IntVector, dot
from conelift.exceptions import ArgumentError
from conelift.hilbert.lift import minimal_generators
from conelift.logging_config import logger

IMPROVED = "improved"
OPTIMAL = "optimal"


@dataclass(frozen=True)
class ImprovementResult:
    status: str
    solution: IntVector
    cost: int
    previous_cost: int
    element: IntVector | None = None

    @property
    def improved(self) -> bool:
        return self.status == IMPROVED


def improve_binary(
    A: IntMatrix,
    b: IntVector,
    c: IntVector,
    z0: IntVector,
    strategy: str = "input-order",
    engine: str = "graded",
    threads: int = 1,
) -> ImprovementResult:
    """
    Find a cheaper 0-1 solution than z0 or report that none is reachable.

    Columns where z0 is 1 are flipped (z ↦ 1 - z), which moves z0 to the
    origin. An improving step is then an element v <= 1 of the truncated
    Hilbert basis of ker(A') with c'·v < 0; the first one in lexicographic
    order is used.
    """
    n = A.ncols
    if len(c) != n or len(z0) != n:
        raise ArgumentError(f"Cost and start vectors must have {n} entries")
    if any(x not in (0, 1) for x in z0):
        raise ArgumentError(f"Start point {z0} is not binary")
    if A.apply(z0) != tuple(b):
        raise ArgumentError("Start point does not satisfy Az = b")

    flips = tuple(-1 if x else 1 for x in z0)
    flipped = IntMatrix(
        tuple(tuple(a * f for a, f in zip(row, flips)) for row in A.rows), n
    )
    flipped_cost = tuple(a * f for a, f in zip(c, flips))
    previous = dot(c, z0)

    basis = minimal_generators(
        integer_kernel(flipped),
        bounds=Bounds.uniform(n, 1),
        strategy=strategy,
        engine=engine,
        threads=threads,
    )
    step = next((v for v in basis if dot(flipped_cost, v) < 0), None)
    if step is None:
        logger.info("No improving direction among %d truncated basis elements", len(basis))
        return ImprovementResult(OPTIMAL, tuple(z0), previous, previous)

    solution = tuple(1 - v if x else v for x, v in zip(z0, step))
    cost = dot(c, solution)
    logger.info("Improved cost %d -> %d", previous, cost)
    return ImprovementResult(IMPROVED, solution, cost, previous, step)
