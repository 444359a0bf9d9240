"""
Homogeneous equality systems for magic arrays (benchmark instances).
"""
from __future__ import annotations

from itertools import product

from conelift.core.vectors import IntMatrix, IntVector
from conelift.exceptions import ArgumentError


def _index(cell: tuple[int, ...], side: int) -> int:
    out = 0
    for c in cell:
        out = out * side + c
    return out


def _indicator(cells: list[tuple[int, ...]], side: int, n: int) -> IntVector:
    v = [0] * n
    for cell in cells:
        v[_index(cell, side)] += 1
    return tuple(v)


def magic_array(side: int, dims: int = 2, diagonals: bool = True) -> IntMatrix:
    """
    Rows line_k - line_0 over side**dims variables (row-major), one per
    axis-parallel line and, if requested, per main space diagonal. The
    kernel-orthant points are exactly the magic arrays.
    """
    if side < 1:
        raise ArgumentError("Side length must be >= 1")
    if dims < 1:
        raise ArgumentError("Dimension must be >= 1")
    n = side**dims
    lines: list[IntVector] = []
    for axis in range(dims):
        for fixed in product(range(side), repeat=dims - 1):
            cells = [fixed[:axis] + (t,) + fixed[axis:] for t in range(side)]
            lines.append(_indicator(cells, side, n))
    if diagonals:
        for flips in product((False, True), repeat=dims - 1):
            cells = [
                (t,) + tuple(side - 1 - t if flip else t for flip in flips)
                for t in range(side)
            ]
            lines.append(_indicator(cells, side, n))
    first = lines[0]
    rows = [tuple(a - b for a, b in zip(line, first)) for line in lines[1:]]
    return IntMatrix(tuple(r for r in rows if any(r)), n)


def magic_system(n: int, diagonals: bool = True) -> IntMatrix:
    """n x n magic squares."""
    return magic_array(n, 2, diagonals)
