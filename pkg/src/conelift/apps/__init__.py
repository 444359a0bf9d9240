"""
conelift.apps
=============
Applications built on the two lift engines.
"""
from .decompose import Decomposition, decompose
from .dual import DualConeResult, dual_cone, hilbert_from_generators
from .improve import ImprovementResult, improve_binary
from .magic import magic_array, magic_system

__all__ = [
    "Decomposition",
    "decompose",
    "DualConeResult",
    "dual_cone",
    "hilbert_from_generators",
    "ImprovementResult",
    "improve_binary",
    "magic_array",
    "magic_system",
]
