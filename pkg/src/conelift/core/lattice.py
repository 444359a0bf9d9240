"""
Lattice preprocessing: triangular generator form, integer kernels,
projections and membership tests.

All elimination is integral and unimodular (extended-Euclid row
combinations), so the integer row span never changes.
"""
from __future__ import annotations

from dataclasses import dataclass

from conelift.core.vectors import IntMatrix, IntVector
from conelift.exceptions import ArgumentError


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    # Invariants:
    #          x * a +      y * b ==      g
    #     next_x * a + next_y * b == next_g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _reduce_column(rows: list[list[int]], r: int, col: int) -> bool:
    """
    Drive column `col` of rows r.. to a single positive entry in row r.

    Returns False (rows untouched) when the column is zero from row r down.
    """
    first = next((i for i in range(r, len(rows)) if rows[i][col]), None)
    if first is None:
        return False
    rows[r], rows[first] = rows[first], rows[r]
    for i in range(r + 1, len(rows)):
        b = rows[i][col]
        if not b:
            continue
        piv = rows[r]
        a = piv[col]
        if b % a == 0:
            q = b // a
            rows[i] = [o - q * p for p, o in zip(piv, rows[i])]
            continue
        x, y, g = xgcd(a, b)
        ag, bg = a // g, b // g
        other = rows[i]
        rows[r] = [x * p + y * o for p, o in zip(piv, other)]
        rows[i] = [ag * o - bg * p for p, o in zip(piv, other)]
    if rows[r][col] < 0:
        rows[r] = [-e for e in rows[r]]
    return True


def _row_echelon(rows: list[list[int]], width: int) -> int:
    """In-place echelon form on the first `width` columns; returns the rank."""
    r = 0
    for col in range(width):
        if r == len(rows):
            break
        if _reduce_column(rows, r, col):
            r += 1
    return r


@dataclass(frozen=True)
class TriangularBasis:
    """
    Lattice generators in upper-triangular working form.

    Row i is zero in working columns 0..i-1 and has a positive pivot in
    working column i. col_perm[w] is the original column sitting at working
    position w.
    """

    rows: tuple[IntVector, ...]
    col_perm: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if sorted(self.col_perm) != list(range(self.n)):
            raise ArgumentError("col_perm must be a permutation of range(n)")
        for i, row in enumerate(self.rows):
            if len(row) != self.n:
                raise ArgumentError(f"Basis row {i} has wrong dimension")
            if any(row[:i]) or row[i] <= 0:
                raise ArgumentError(f"Basis row {i} is not in triangular form")

    @property
    def s(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(row[i] for i, row in enumerate(self.rows))

    def to_working(self, v: IntVector) -> IntVector:
        """Reorder an input-order vector into working column order."""
        return tuple(v[c] for c in self.col_perm)

    def from_working(self, v: IntVector) -> IntVector:
        """Undo the column permutation."""
        out = [0] * self.n
        for w, c in enumerate(self.col_perm):
            out[c] = v[w]
        return tuple(out)


def triangularize(generators: IntMatrix) -> TriangularBasis:
    """
    Bring lattice generators into triangular form with positive pivots.

    Zero rows (rank deficiency) are dropped. When the current working column
    is zero below the pivot row, a later column holding a nonzero entry is
    swapped in and the swap is recorded in col_perm.
    """
    n = generators.ncols
    if n < 1:
        raise ArgumentError("Generators must have at least one column")
    rows = [list(r) for r in generators.rows if any(r)]
    perm = list(range(n))
    r = 0
    while r < len(rows) and r < n:
        if not _reduce_column(rows, r, r):
            swap = next(
                (c for c in range(r + 1, n) if any(rows[i][c] for i in range(r, len(rows)))),
                None,
            )
            if swap is None:
                break
            for row in rows:
                row[r], row[swap] = row[swap], row[r]
            perm[r], perm[swap] = perm[swap], perm[r]
            _reduce_column(rows, r, r)
        r += 1
    return TriangularBasis(tuple(tuple(row) for row in rows[:r]), tuple(perm), n)


def rank(matrix: IntMatrix) -> int:
    """Rank over the rationals (equal to the integer row-span rank)."""
    if matrix.ncols == 0 or matrix.nrows == 0:
        return 0
    return triangularize(matrix).s


def integer_kernel(A: IntMatrix) -> IntMatrix:
    """
    Lattice basis of ker_Z(A) = {z in Z^n : A z = 0}.

    Row-reduce [A^T | I_n] with unimodular operations; the identity part of
    the rows whose A^T part vanished is a saturated kernel basis. The basis
    is returned in echelon form.
    """
    n = A.ncols
    if n < 1:
        raise ArgumentError("Matrix must have at least one column")
    d = A.nrows
    aug = [list(A.column(k)) + [int(i == k) for i in range(n)] for k in range(n)]
    r = _row_echelon(aug, d)
    kernel = [row[d:] for row in aug[r:]]
    _row_echelon(kernel, n)
    return IntMatrix(tuple(tuple(row) for row in kernel if any(row)), n)


def project(v: IntVector, j: int) -> IntVector:
    """First j coordinates of v."""
    if not 1 <= j <= len(v):
        raise ArgumentError(f"Projection index {j} out of range 1..{len(v)}")
    return v[:j]


def lattice_member(basis: TriangularBasis, v: IntVector) -> bool:
    """
    True iff v (given in working column order) is an integer combination of
    the basis rows; decided by back-substitution along the pivots.
    """
    if len(v) != basis.n:
        raise ArgumentError(f"Dimension mismatch: {len(v)} != {basis.n}")
    rest = list(v)
    for i, row in enumerate(basis.rows):
        if rest[i] % row[i]:
            return False
        q = rest[i] // row[i]
        if q:
            rest = [a - q * b for a, b in zip(rest, row)]
    return not any(rest)
