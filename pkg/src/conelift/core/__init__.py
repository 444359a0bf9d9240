"""
conelift.core
=============
Exact integer vectors/matrices, triangular lattice preprocessing, bounds and
the sign-compatible divisibility order.
"""
from .vectors import IntMatrix, IntVector, primitive, vector
from .lattice import (
    TriangularBasis,
    integer_kernel,
    lattice_member,
    project,
    rank,
    triangularize,
)
from .order import Bounds, sign_divides
from .rational import solve_exact

__all__ = [
    "IntMatrix",
    "IntVector",
    "vector",
    "primitive",
    "TriangularBasis",
    "triangularize",
    "integer_kernel",
    "project",
    "rank",
    "lattice_member",
    "Bounds",
    "sign_divides",
    "solve_exact",
]
