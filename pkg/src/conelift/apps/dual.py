"""
Dual cones and Hilbert bases of cones given by generators.

For C = cone(p₁…pₛ) ⊆ ℝⁿ the map v ↦ Pv identifies the dual cone
C^D = {v : Pv ≥ 0} with span(columns of P) ∩ ℝ₊ˢ, and ℤⁿ ∩ C^D with the
column lattice of P intersected with ℤ₊ˢ. Both engines run on that column
span; results are pulled back by solving Pv = u exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from conelift.core.lattice import rank
from conelift.core.rational import clear_denominators, integral, solve_exact
from conelift.core.vectors import IntMatrix, IntVector
from conelift.exceptions import ArgumentError, DegeneracyError
from conelift.hilbert.lift import minimal_generators
from conelift.logging_config import logger
from conelift.rays.lift import extreme_rays


@dataclass(frozen=True)
class DualConeResult:
    """Facet normals of cone(P) (rays of the dual) and the dual's Hilbert basis."""

    rays: list[IntVector] = field(default_factory=list)
    hilbert: list[IntVector] = field(default_factory=list)


def _check_generators(P: IntMatrix) -> None:
    if P.nrows == 0:
        raise ArgumentError("At least one cone generator is required")
    for i, row in enumerate(P.rows):
        if not any(row):
            raise ArgumentError(f"Generator {i} is the zero vector")
    r = rank(P)
    if r < P.ncols:
        raise DegeneracyError(
            f"Generators span a {r}-dimensional space in ℝ^{P.ncols}; "
            "the dual cone contains a line and the pullback Pv = u is not unique"
        )


def dual_cone(
    P: IntMatrix,
    compute_rays: bool = True,
    compute_hilbert: bool = True,
    strategy: str = "input-order",
    engine: str = "graded",
    threads: int = 1,
) -> DualConeResult:
    """Extreme rays and Hilbert basis of {v : p_i·v >= 0 for all rows p_i}."""
    _check_generators(P)
    columns = P.transpose()
    rays: list[IntVector] = []
    hilbert: list[IntVector] = []
    if compute_rays:
        rays = sorted(
            clear_denominators(solve_exact(P, u))
            for u in extreme_rays(columns, strategy=strategy)
        )
        logger.info("Dual cone: %d facet normals", len(rays))
    if compute_hilbert:
        hilbert = sorted(
            integral(solve_exact(P, u))
            for u in minimal_generators(
                columns, strategy=strategy, engine=engine, threads=threads
            )
        )
        logger.info("Dual cone: %d Hilbert basis elements", len(hilbert))
    return DualConeResult(rays=rays, hilbert=hilbert)


def hilbert_from_generators(
    P: IntMatrix,
    strategy: str = "input-order",
    engine: str = "graded",
    threads: int = 1,
) -> list[IntVector]:
    """Hilbert basis of ℤⁿ ∩ cone(rows of P), via C = (C^D)^D."""
    normals = dual_cone(P, compute_hilbert=False, strategy=strategy).rays
    if not normals:
        raise DegeneracyError("Cone has no facets; its dual is trivial")
    return dual_cone(
        IntMatrix(tuple(normals), P.ncols),
        compute_rays=False,
        strategy=strategy,
        engine=engine,
        threads=threads,
    ).hilbert
