"""
Matrix file format.

    # optional comment lines
    m n
    a11 a12 ... a1n
    ...
    am1 am2 ... amn

Entries are decimal integers of any size. Vector files are 1 x n or n x 1.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from conelift.core.vectors import IntMatrix, IntVector
from conelift.exceptions import MatrixFormatError


def _tokens(line: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in line.split()]
    except ValueError as e:
        raise MatrixFormatError(f"Line {lineno}: non-integer entry ({e})") from e


def parse_matrix(text: str, source: str = "<string>") -> IntMatrix:
    lines = [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise MatrixFormatError(f"{source}: missing 'm n' header")
    lineno, header = lines[0]
    dims = _tokens(header, lineno)
    if len(dims) != 2 or dims[0] < 0 or dims[1] < 0:
        raise MatrixFormatError(f"{source}: header must be 'm n', got '{header}'")
    m, n = dims
    body = lines[1:]
    if len(body) != m:
        raise MatrixFormatError(f"{source}: expected {m} rows, found {len(body)}")
    rows = []
    for lineno, line in body:
        row = _tokens(line, lineno)
        if len(row) != n:
            raise MatrixFormatError(
                f"{source}: line {lineno} has {len(row)} entries, expected {n}"
            )
        rows.append(tuple(row))
    return IntMatrix(tuple(rows), n)


def read_matrix(path: str | Path) -> IntMatrix:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MatrixFormatError(f"Cannot read {path}: {e}") from e
    return parse_matrix(text, str(path))


def read_vector(path: str | Path) -> IntVector:
    M = read_matrix(path)
    if M.nrows == 1:
        return M.rows[0]
    if M.ncols == 1:
        return M.column(0)
    raise MatrixFormatError(
        f"{path}: expected a single row or column, got {M.nrows}x{M.ncols}"
    )


def format_matrix(
    rows: Iterable[IntVector], ncols: int, comments: Iterable[str] = ()
) -> str:
    """Render rows (sorted lexicographically) with the 'm n' header."""
    ordered = sorted(rows)
    out = [f"# {c}" for c in comments]
    out.append(f"{len(ordered)} {ncols}")
    out.extend(" ".join(str(a) for a in row) for row in ordered)
    return "\n".join(out) + "\n"


def write_matrix(
    stream: TextIO, rows: Iterable[IntVector], ncols: int, comments: Iterable[str] = ()
) -> None:
    stream.write(format_matrix(rows, ncols, comments))
