"""
Project-and-lift driver for minimal generators.

Starting from H₁⁺ = {(p₁₁)}, each stage lifts one more working column:
build the stage input set, hand it to a step engine, keep the elements with
a non-negative lift coordinate. After the last column Hₙ⁺ is the Hilbert
basis of Λ ∩ ℝ₊ⁿ (truncated to the bounds, when given).
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from tqdm import tqdm

from conelift.core.lattice import TriangularBasis, triangularize
from conelift.core.order import Bounds
from conelift.core.vectors import IntMatrix, IntVector, scale, sub
from conelift.exceptions import ArgumentError
from conelift.hilbert.elements import SignedElement
from conelift.hilbert.engines import get_engine
from conelift.hilbert.strategies import get_strategy
from conelift.logging_config import logger


@dataclass(frozen=True)
class LiftState:
    """
    Stage j of a lift. `current` holds full working-order lattice vectors
    whose projections onto `order` form H_j⁺.
    """

    basis: TriangularBasis
    j: int
    current: tuple[IntVector, ...]
    bounds: Bounds
    order: tuple[int, ...]
    remaining_cols: tuple[int, ...]

    def prefix(self, v: IntVector) -> IntVector:
        return tuple(v[c] for c in self.order)

    @property
    def done(self) -> bool:
        return not self.remaining_cols

    def prefix_bounds(self) -> Bounds:
        return self.bounds.restricted(self.order)


@dataclass(frozen=True)
class StageRecord:
    j: int
    column: int
    size: int
    stop_level: int | None


@dataclass
class LiftTrace:
    """Per-stage sizes of H_j⁺, in the order the stages ran."""

    stages: list[StageRecord] = field(default_factory=list)

    def record(self, stage: StageRecord) -> None:
        self.stages.append(stage)

    @property
    def peak(self) -> int:
        return max((s.size for s in self.stages), default=0)

    @property
    def sizes(self) -> list[int]:
        return [s.size for s in self.stages]


def initial_state(basis: TriangularBasis, bounds: Bounds) -> LiftState:
    """H₁⁺ = {(p₁₁)} (empty if the pivot exceeds the first bound)."""
    n = basis.n
    if basis.s == 0:
        return LiftState(basis, n, (), bounds, tuple(range(n)), ())
    first = basis.rows[0]
    current = (first,) if bounds.allows(0, first[0]) else ()
    pivots_left = tuple(range(1, basis.s))
    free = tuple(sorted(range(basis.s, n), key=lambda c: basis.col_perm[c]))
    return LiftState(basis, 1, current, bounds, (0,), pivots_left + free)


def choose_next_column(state: LiftState, strategy: str = "input-order") -> int:
    """
    Next working column to lift. Pivot columns are fixed by the triangular
    form; only the free columns are left to the strategy.
    """
    if not state.remaining_cols:
        raise ArgumentError("All columns are already lifted")
    if state.j < state.basis.s:
        return state.j
    return get_strategy(strategy)(state.current, state.remaining_cols)


def build_input_hb(state: LiftState, column: int | None = None) -> list[SignedElement]:
    """
    Stage input set: one lift per element of H_j⁺, plus ±p_{j+1} while
    pivot rows remain. Lifts below a pivot are reduced into [0, p).
    """
    col = choose_next_column(state) if column is None else column
    j = state.j
    basis = state.basis
    if j < basis.s:
        row = basis.rows[j]
        p = row[col]
        F = []
        for v in state.current:
            q = v[col] // p
            lifted = sub(v, scale(q, row)) if q else v
            F.append(SignedElement(state.prefix(v), lifted[col], lifted))
        zero = (0,) * j
        F.append(SignedElement(zero, p, row))
        F.append(SignedElement(zero, -p, scale(-1, row)))
        return F
    return [SignedElement(state.prefix(v), v[col], v) for v in state.current]


StageHook = Callable[[LiftState], LiftState]


class HilbertLifter:
    """
    Runs the lift stage by stage. An optional hook sees the state after every
    stage and may return a modified one (tighter bounds, pruned sets).
    """

    def __init__(
        self,
        generators: IntMatrix,
        bounds: Bounds | None = None,
        strategy: str = "input-order",
        engine: str = "graded",
        threads: int = 1,
        trace: LiftTrace | None = None,
        on_stage: StageHook | None = None,
        progress: bool = False,
    ):
        if generators.ncols < 1:
            raise ArgumentError("Generators must have at least one column")
        if bounds is not None and len(bounds) != generators.ncols:
            raise ArgumentError(
                f"Bounds have {len(bounds)} entries, expected {generators.ncols}"
            )
        if threads < 1:
            raise ArgumentError("threads must be >= 1")
        get_strategy(strategy)
        self.generators = generators
        self.bounds = bounds or Bounds.unbounded(generators.ncols)
        self.strategy = strategy
        self.engine = get_engine(engine)
        self.threads = threads
        self.trace = trace
        self.on_stage = on_stage
        self.progress = progress
        self.basis: TriangularBasis | None = None

    def start(self) -> LiftState:
        self.basis = triangularize(self.generators)
        logger.debug(
            "Triangular basis: rank %d, pivots %s, bounds %s",
            self.basis.s,
            self.basis.pivots,
            self.bounds.render(),
        )
        return initial_state(self.basis, self.bounds.permuted(self.basis.col_perm))

    def advance(self, state: LiftState) -> LiftState:
        col = choose_next_column(state, self.strategy)
        F = build_input_hb(state, col)
        pivot = state.basis.pivots[state.j] if state.j < state.basis.s else None
        outcome = self.engine(F, pivot, state.prefix_bounds(), self.threads)
        current = tuple(
            sorted(
                e.lift
                for e in outcome.elements
                if e.last >= 0 and state.bounds.allows(col, e.last)
            )
        )
        nxt = replace(
            state,
            j=state.j + 1,
            current=current,
            order=state.order + (col,),
            remaining_cols=tuple(c for c in state.remaining_cols if c != col),
        )
        logger.info(
            "Stage %d: lifted column %d, |H⁺|=%d",
            nxt.j,
            state.basis.col_perm[col],
            len(current),
        )
        if self.trace is not None:
            self.trace.record(
                StageRecord(
                    nxt.j, state.basis.col_perm[col], len(current), outcome.stop_level
                )
            )
        if self.on_stage is not None:
            nxt = self.on_stage(nxt)
        return nxt

    def finish(self, state: LiftState) -> list[IntVector]:
        if not state.done:
            raise ArgumentError(f"Lift stopped at stage {state.j} of {state.basis.n}")
        return sorted(state.basis.from_working(v) for v in state.current)

    def run(self) -> list[IntVector]:
        state = self.start()
        with tqdm(
            total=len(state.remaining_cols),
            desc="Lifting",
            disable=None if self.progress else True,
        ) as bar:
            while not state.done:
                state = self.advance(state)
                bar.update(1)
        return self.finish(state)


def minimal_generators(
    generators: IntMatrix,
    bounds: Bounds | None = None,
    strategy: str = "input-order",
    engine: str = "graded",
    threads: int = 1,
    trace: LiftTrace | None = None,
    progress: bool = False,
) -> list[IntVector]:
    """
    Hilbert basis of (Λ ∩ ℝ₊ⁿ, +) for the lattice Λ spanned by the rows of
    `generators`, restricted to {z ≤ bounds}; sorted lexicographically.
    """
    lifter = HilbertLifter(
        generators,
        bounds=bounds,
        strategy=strategy,
        engine=engine,
        threads=threads,
        trace=trace,
        progress=progress,
    )
    return lifter.run()

