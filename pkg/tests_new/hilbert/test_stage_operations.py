from dataclasses import replace

import pytest

from conelift.core.order import Bounds
from conelift.core.vectors import IntMatrix
from conelift.exceptions import ArgumentError, UnknownStrategyError
from conelift.hilbert.completion import (
    complete_hb,
    minimize_hb,
    normal_form_hb,
    s_vector_hb,
)
from conelift.hilbert.elements import GradedSet, SignedElement
from conelift.hilbert.graded import graded_step_hb, stop_rule_violations
from conelift.hilbert.lift import (
    HilbertLifter,
    build_input_hb,
    choose_next_column,
)

from tests_new.common.helpers import TRIANGULAR_111


def E(prefix, last):
    return SignedElement(tuple(prefix), last)


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

def test_signed_element_rejects_negative_prefix():
    with pytest.raises(ArgumentError):
        E((1, -1), 0)


def test_signed_element_level_and_divides():
    a, b = E((1, 0), -2), E((1, 1), -3)
    assert a.level == 1 and b.level == 2
    assert a.divides(b)
    assert not b.divides(a)
    assert not E((0, 0), 1).divides(E((1, 1), -1))


def test_graded_set_buckets():
    g = GradedSet(pivot=None, bounds=Bounds.unbounded(2))
    g.add(E((0, 0), 1))
    g.add(E((1, 1), 0))
    assert g.max_nonempty == 2
    assert g.bucket(1) == []
    assert g.divided(E((2, 1), 0), 3)
    assert not g.divided(E((2, 1), 0), 1)
    assert len(g) == 2


# ---------------------------------------------------------------------------
# build_input_hb
# ---------------------------------------------------------------------------

def test_build_input_reduces_lift_modulo_pivot():
    lifter = HilbertLifter(IntMatrix.from_rows([(1, 7), (0, 3)]))
    state = lifter.start()
    F = build_input_hb(state)
    assert F == [E((1,), 1), E((0,), 3), E((0,), -3)]
    assert F[0].lift == (1, 1)


def test_build_input_unique_lifts_past_pivots():
    lifter = HilbertLifter(TRIANGULAR_111)
    state = lifter.advance(lifter.start())
    assert state.j == 2
    assert state.current == ((0, 1, 1), (1, 0, 1))
    assert build_input_hb(state) == [E((0, 1), 1), E((1, 0), 1)]


# ---------------------------------------------------------------------------
# s_vector_hb / normal_form_hb
# ---------------------------------------------------------------------------

def test_s_vector_hb_examples():
    assert s_vector_hb(E((1, 0), 2), E((0, 1), -1)) == E((1, 1), 1)
    assert s_vector_hb(E((1, 0), 2), E((0, 1), 3)) is None


def test_s_vector_hb_respects_prefix_bounds():
    bounds = Bounds.of([1, 1])
    assert s_vector_hb(E((1, 0), 2), E((1, 0), -1), bounds) is None
    assert s_vector_hb(E((1, 0), 2), E((0, 1), -9), bounds) == E((1, 1), -7)


def test_normal_form_exact_multiple_vanishes():
    assert normal_form_hb(E((2, 2), -4), [E((1, 1), -2)]).is_zero


def test_normal_form_partial_reduction():
    assert normal_form_hb(E((3, 1), -1), [E((2, 1), -1)]) == E((1, 0), 0)


def test_normal_form_irreducible_unchanged():
    s = E((1, 0), 1)
    assert normal_form_hb(s, [E((0, 1), 1), E((1, 0), -1)]) == s


def test_normal_form_carries_lift():
    s = SignedElement((2,), 2, (2, 2, 5))
    g = SignedElement((1,), 1, (1, 1, 2))
    r = normal_form_hb(s, [g])
    assert r.is_zero
    assert r.lift == (0, 0, 1)


# ---------------------------------------------------------------------------
# complete_hb / graded_step_hb
# ---------------------------------------------------------------------------

PIVOT_TWO_INPUT = [E((1,), 1), E((0,), 2), E((0,), -2)]
PIVOT_TWO_MINIMAL = {E((0,), 2), E((0,), -2), E((1,), 1), E((1,), -1), E((2,), 0)}


def test_complete_then_minimize():
    G = complete_hb(PIVOT_TWO_INPUT)
    assert set(PIVOT_TWO_INPUT) <= set(G)
    assert set(minimize_hb(G)) == PIVOT_TWO_MINIMAL


def test_complete_same_sign_input_unchanged():
    F = [E((1, 0), 1), E((0, 1), 2)]
    assert complete_hb(F) == F


def test_complete_empty():
    assert complete_hb([]) == []
    assert graded_step_hb([], None, Bounds.unbounded(1)).elements() == []


def test_graded_matches_completion_without_reductions():
    graded = graded_step_hb(PIVOT_TWO_INPUT, 2, Bounds.unbounded(1))
    assert set(graded.elements()) == PIVOT_TWO_MINIMAL
    assert stop_rule_violations(graded) == []


def test_graded_unit_lattice_step():
    lifter = HilbertLifter(IntMatrix.identity(2))
    F = build_input_hb(lifter.start())
    graded = graded_step_hb(F, 1, Bounds.unbounded(1))
    assert set(graded.elements()) == {E((1,), 0), E((0,), 1), E((0,), -1)}
    assert graded.stop_level == 1


def test_graded_threads_identical():
    F = [E((1, 0), 3), E((0, 1), -2), E((1, 1), 1), E((2, 0), -5)]
    single = graded_step_hb(F, None, Bounds.unbounded(2))
    pooled = graded_step_hb(F, None, Bounds.unbounded(2), threads=4)
    assert single.elements() == pooled.elements()


def test_graded_logs_levels(capture_logs):
    graded_step_hb(PIVOT_TWO_INPUT, 2, Bounds.unbounded(1))
    assert "Stopping rule fired" in capture_logs.getvalue()


# ---------------------------------------------------------------------------
# choose_next_column
# ---------------------------------------------------------------------------

def _free_state(current, remaining):
    lifter = HilbertLifter(IntMatrix.from_rows([(1, 0, 0, 0, 0, 0)]))
    state = lifter.start()
    return replace(state, current=tuple(current), remaining_cols=tuple(remaining))


def test_choose_input_order():
    state = _free_state([], [5, 3, 4])
    assert choose_next_column(state, "input-order") == 5


def test_choose_min_pairs():
    current = [(1, 0, 0, 1, 1), (1, 0, 0, 1, 2), (1, 0, 0, -1, 3)]
    state = _free_state(current, [3, 4])
    assert choose_next_column(state, "min-pairs") == 4


def test_choose_single_column_any_strategy():
    state = _free_state([(1, 0, 0, 2, -1)], [4])
    for name in ("input-order", "min-pairs", "max-zeros"):
        assert choose_next_column(state, name) == 4


def test_choose_unknown_strategy():
    with pytest.raises(UnknownStrategyError):
        choose_next_column(_free_state([], [1]), "nope")


def test_choose_pivot_columns_forced():
    lifter = HilbertLifter(TRIANGULAR_111)
    state = lifter.start()
    assert choose_next_column(state, "max-zeros") == 1
