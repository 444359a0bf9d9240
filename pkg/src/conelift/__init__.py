"""
conelift – Hilbert bases and extreme rays of lattice cones by project-and-lift.

The top-level namespace re-exports the two main entry points; applications
(decomposition, dual cones, 0-1 improvement, magic arrays) live in
conelift.apps.
"""
from .version import __version__
from conelift.logging_config import logger
from conelift.exceptions import (
    ConeLiftError,
    ArgumentError,
    ComputationError,
    ConfigValidationError,
    DegeneracyError,
    ResourceLimitError,
)
from conelift.hilbert.lift import minimal_generators
from conelift.rays.lift import extreme_rays

__all__ = [
    "__version__",
    "logger",
    "ConeLiftError",
    "ArgumentError",
    "ComputationError",
    "ConfigValidationError",
    "DegeneracyError",
    "ResourceLimitError",
    "minimal_generators",
    "extreme_rays",
]
