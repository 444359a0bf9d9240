from __future__ import annotations

from conelift.core.vectors import IntVector


def parse_blocks(text: str) -> dict[str, list[IntVector]]:
    """
    Split CLI matrix output into blocks keyed by their leading '# name'
    comment ("" when a block has no comment). Headers are checked against the
    row count.
    """
    blocks: dict[str, list[IntVector]] = {}
    name = ""
    expected: int | None = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            name = line.lstrip("#").strip()
            expected = None
            continue
        if expected is None:
            m, _ = (int(t) for t in line.split())
            expected = m
            blocks[name] = []
            continue
        blocks[name].append(tuple(int(t) for t in line.split()))
    for key, rows in blocks.items():
        assert rows == sorted(rows), f"block {key!r} not sorted"
    return blocks


def parse_rows(text: str) -> list[IntVector]:
    """Rows of a single-block output."""
    blocks = parse_blocks(text)
    assert len(blocks) == 1, blocks.keys()
    return next(iter(blocks.values()))
