"""
conelift.hilbert
================
Project-and-lift computation of minimal generators of Λ ∩ ℝ₊ⁿ.
"""
from .completion import complete_hb, minimize_hb, normal_form_hb, s_vector_hb
from .elements import GradedSet, SignedElement
from .engines import get_engine, list_engines, register_engine
from .graded import graded_step_hb, stop_rule_violations
from .lift import (
    HilbertLifter,
    LiftState,
    LiftTrace,
    build_input_hb,
    choose_next_column,
    minimal_generators,
)
from .strategies import get_strategy, list_strategies, register_strategy

__all__ = [
    "SignedElement",
    "GradedSet",
    "LiftState",
    "LiftTrace",
    "HilbertLifter",
    "build_input_hb",
    "s_vector_hb",
    "normal_form_hb",
    "complete_hb",
    "minimize_hb",
    "graded_step_hb",
    "stop_rule_violations",
    "choose_next_column",
    "minimal_generators",
    "register_engine",
    "get_engine",
    "list_engines",
    "register_strategy",
    "get_strategy",
    "list_strategies",
]
