"""
Exact rational linear algebra on top of sympy, used where the integral
machinery has to be inverted (dual-cone pullbacks, span membership).
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from sympy import Matrix

from conelift.core.vectors import IntMatrix, IntVector, primitive
from conelift.exceptions import DegeneracyError


def solve_exact(M: IntMatrix, b: Sequence[int]) -> tuple[Fraction, ...]:
    """Unique rational solution x of M x = b; DegeneracyError otherwise."""
    A = Matrix(M.nrows, M.ncols, [e for row in M.rows for e in row])
    try:
        sol, params = A.gauss_jordan_solve(Matrix(list(b)))
    except ValueError as e:
        raise DegeneracyError(f"System has no solution: {e}") from e
    if params.shape[0]:
        raise DegeneracyError(
            f"System has a {params.shape[0]}-dimensional solution family"
        )
    return tuple(Fraction(int(x.p), int(x.q)) for x in sol)


def integral(x: Sequence[Fraction]) -> IntVector:
    """Convert an integral rational vector; DegeneracyError if it is not."""
    if any(f.denominator != 1 for f in x):
        raise DegeneracyError(f"Expected an integral solution, got {list(map(str, x))}")
    return tuple(int(f) for f in x)


def clear_denominators(x: Sequence[Fraction]) -> IntVector:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    common = lcm(*(f.denominator for f in x)) if x else 1
    return primitive(tuple(int(f * common) for f in x))


def nullspace(M: IntMatrix) -> list[IntVector]:
    """Rational nullspace basis of M, each vector scaled to be primitive."""
    A = Matrix(M.nrows, M.ncols, [e for row in M.rows for e in row])
    basis = A.nullspace() if M.nrows else [Matrix.eye(M.ncols).col(k) for k in range(M.ncols)]
    return [clear_denominators([Fraction(int(e.p), int(e.q)) for e in vec]) for vec in basis]
