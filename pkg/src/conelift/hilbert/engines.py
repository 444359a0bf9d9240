"""
Lift-step engines. Each engine turns a stage input set into the minimal
elements H⁺ ∪ H⁻ of that stage.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Protocol, Sequence

from conelift.core.order import Bounds
from conelift.exceptions import RegistryConflictError, UnknownEngineError
from conelift.hilbert.completion import complete_hb, minimize_hb
from conelift.hilbert.elements import SignedElement
from conelift.hilbert.graded import graded_step_hb


@dataclass(frozen=True)
class StepOutcome:
    elements: list[SignedElement]
    stop_level: int | None = None


class StepEngine(Protocol):
    def __call__(
        self,
        F: Sequence[SignedElement],
        pivot: int | None,
        bounds: Bounds,
        threads: int,
    ) -> StepOutcome: ...


_ENGINES: dict[str, StepEngine] = {}


def register_engine(name: str) -> Callable[[StepEngine], StepEngine]:
    def decorator(fn: StepEngine) -> StepEngine:
        key = name.lower()
        existing = _ENGINES.get(key)
        if existing is not None and existing is not fn:
            raise RegistryConflictError(f"Lift engine '{name}' already registered.")
        _ENGINES[key] = fn
        return fn
    return decorator


def get_engine(name: str) -> StepEngine:
    try:
        return _ENGINES[name.lower()]
    except KeyError as e:
        raise UnknownEngineError(
            f"Unknown lift engine '{name}'. Available={list_engines()}"
        ) from e


def list_engines() -> list[str]:
    return list(_ENGINES.keys())


@register_engine("graded")
def graded_engine(
    F: Sequence[SignedElement], pivot: int | None, bounds: Bounds, threads: int
) -> StepOutcome:
    graded = graded_step_hb(F, pivot, bounds, threads=threads)
    return StepOutcome(graded.elements(), graded.stop_level)


@register_engine("completion")
def completion_engine(
    F: Sequence[SignedElement], pivot: int | None, bounds: Bounds, threads: int
) -> StepOutcome:
    return StepOutcome(minimize_hb(complete_hb(F, bounds)))
