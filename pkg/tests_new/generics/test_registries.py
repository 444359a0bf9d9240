import pytest

from conelift.core.lattice import integer_kernel
from conelift.exceptions import (
    RegistryConflictError,
    UnknownEngineError,
    UnknownStrategyError,
)
from conelift.hilbert.engines import (
    StepOutcome,
    get_engine,
    list_engines,
    register_engine,
)
from conelift.hilbert.lift import minimal_generators
from conelift.hilbert.strategies import (
    get_strategy,
    list_strategies,
    min_pairs,
    register_strategy,
)

from tests_new.common.helpers import KER_1111


def test_builtin_registrations():
    assert {"input-order", "min-pairs", "max-zeros"} <= set(list_strategies())
    assert {"graded", "completion"} <= set(list_engines())
    assert get_strategy("MIN-PAIRS") is min_pairs


def test_unknown_names():
    with pytest.raises(UnknownStrategyError, match="Available="):
        get_strategy("nope")
    with pytest.raises(UnknownEngineError):
        get_engine("nope")


def test_strategy_conflict(registry_reset):
    register_strategy("min-pairs")(min_pairs)
    with pytest.raises(RegistryConflictError):
        register_strategy("min-pairs")(lambda current, remaining: remaining[0])


def test_engine_conflict(registry_reset):
    with pytest.raises(RegistryConflictError):
        register_engine("graded")(lambda F, pivot, bounds, threads: StepOutcome([]))


def test_custom_strategy_is_used(registry_reset):
    seen = []

    @register_strategy("last-first")
    def last_first(current, remaining):
        seen.append(tuple(remaining))
        return remaining[-1]

    lattice = integer_kernel(KER_1111)
    assert minimal_generators(lattice, strategy="last-first") == minimal_generators(
        lattice
    )
    assert seen


def test_registry_reset_removes_temporary(registry_reset):
    register_strategy("temporary")(lambda current, remaining: remaining[0])
    assert "temporary" in list_strategies()


def test_temporary_registration_is_gone():
    assert "temporary" not in list_strategies()
