"""
Project-and-lift driver for the extreme rays of span(p₁…pₛ) ∩ ℝ₊ⁿ.
"""
from __future__ import annotations

from dataclasses import replace

from tqdm import tqdm

from conelift.core.lattice import triangularize
from conelift.core.order import Bounds
from conelift.core.vectors import IntMatrix, IntVector, primitive, scale, sub
from conelift.hilbert.lift import (
    LiftState,
    LiftTrace,
    StageRecord,
    choose_next_column,
    initial_state,
)
from conelift.hilbert.strategies import get_strategy
from conelift.logging_config import logger
from conelift.rays.completion import complete_ray, minimize_rays
from conelift.rays.elements import RayElement, dedupe_rays


def build_input_ray(state: LiftState, column: int | None = None) -> list[RayElement]:
    """
    One lift per element of R_j⁺, plus ±p_{j+1} while pivot rows remain.
    Below a pivot the lift coordinate is free over ℝ and is set to 0.
    """
    col = choose_next_column(state) if column is None else column
    cols = state.order + (col,)
    basis = state.basis
    if state.j < basis.s:
        row = basis.rows[state.j]
        p = row[col]
        F = [
            RayElement.from_lift(sub(scale(p, v), scale(v[col], row)), cols)
            for v in state.current
        ]
        F.append(RayElement.from_lift(row, cols))
        F.append(RayElement.from_lift(scale(-1, row), cols))
        return dedupe_rays(F)
    return dedupe_rays(RayElement.from_lift(v, cols) for v in state.current)


def _advance(state: LiftState, strategy: str) -> tuple[LiftState, int]:
    col = choose_next_column(state, strategy)
    G = minimize_rays(complete_ray(build_input_ray(state, col)))
    current = tuple(sorted(e.lift for e in G if e.last >= 0))
    nxt = replace(
        state,
        j=state.j + 1,
        current=current,
        order=state.order + (col,),
        remaining_cols=tuple(c for c in state.remaining_cols if c != col),
    )
    return nxt, col


def extreme_rays(
    generators: IntMatrix,
    strategy: str = "input-order",
    trace: LiftTrace | None = None,
    progress: bool = False,
) -> list[IntVector]:
    """
    Primitive generators of the extreme rays of the cone span(rows) ∩ ℝ₊ⁿ,
    sorted lexicographically.
    """
    get_strategy(strategy)
    basis = triangularize(generators)
    state = initial_state(basis, Bounds.unbounded(generators.ncols))
    state = replace(state, current=tuple(primitive(v) for v in state.current))
    with tqdm(
        total=len(state.remaining_cols),
        desc="Lifting rays",
        disable=None if progress else True,
    ) as bar:
        while not state.done:
            state, col = _advance(state, strategy)
            logger.info(
                "Stage %d: lifted column %d, |R⁺|=%d",
                state.j,
                basis.col_perm[col],
                len(state.current),
            )
            if trace is not None:
                trace.record(
                    StageRecord(state.j, basis.col_perm[col], len(state.current), None)
                )
            bar.update(1)
    return sorted({primitive(basis.from_working(v)) for v in state.current})
