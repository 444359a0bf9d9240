"""
Exact integer vectors and matrices.

Vectors are plain tuples of Python ints (arbitrary precision, never wrap).
IntMatrix is an immutable row container that remembers its column count so a
matrix with zero rows still has a width.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from conelift.exceptions import ArgumentError

IntVector = tuple[int, ...]


def vector(entries: Iterable[int]) -> IntVector:
    """Build an IntVector, rejecting non-integer entries."""
    out = tuple(entries)
    for x in out:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ArgumentError(f"Vector entries must be integers, got {x!r}")
    return out


def _check_dims(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ArgumentError(f"Dimension mismatch: {len(u)} != {len(v)}")


def add(u: IntVector, v: IntVector) -> IntVector:
    _check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: IntVector, v: IntVector) -> IntVector:
    _check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c: int, v: IntVector) -> IntVector:
    return tuple(c * a for a in v)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    _check_dims(u, v)
    return sum(a * b for a, b in zip(u, v))


def norm1(v: Sequence[int]) -> int:
    return sum(abs(a) for a in v)


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Componentwise u <= v."""
    _check_dims(u, v)
    return all(a <= b for a, b in zip(u, v))


def is_zero(v: Sequence[int]) -> bool:
    return not any(v)


def is_nonnegative(v: Sequence[int]) -> bool:
    return all(a >= 0 for a in v)


def content(v: Sequence[int]) -> int:
    """Non-negative gcd of all entries (0 for the zero vector)."""
    g = 0
    for a in v:
        g = gcd(g, a)
        if g == 1:
            break
    return g


def primitive(v: IntVector) -> IntVector:
    """Divide by the content; the zero vector is returned unchanged."""
    g = content(v)
    if g <= 1:
        return v
    return tuple(a // g for a in v)


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored as a tuple of equal-length rows."""

    rows: tuple[IntVector, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 0:
            raise ArgumentError("Column count must be non-negative")
        for i, row in enumerate(self.rows):
            if len(row) != self.ncols:
                raise ArgumentError(
                    f"Row {i} has {len(row)} entries, expected {self.ncols}"
                )

    @classmethod
    def from_rows(
        cls, rows: Iterable[Sequence[int]], ncols: int | None = None
    ) -> IntMatrix:
        built = tuple(vector(r) for r in rows)
        if ncols is None:
            if not built:
                raise ArgumentError("Column count required for a matrix without rows")
            ncols = len(built[0])
        return cls(built, ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == k) for k in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[IntVector]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> IntVector:
        return self.rows[i]

    def column(self, k: int) -> IntVector:
        return tuple(row[k] for row in self.rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(self.column(k) for k in range(self.ncols)), self.nrows)

    def apply(self, v: Sequence[int]) -> IntVector:
        """Matrix-vector product M·v."""
        if len(v) != self.ncols:
            raise ArgumentError(f"Dimension mismatch: {len(v)} != {self.ncols}")
        return tuple(dot(row, v) for row in self.rows)
