from __future__ import annotations
import random
from typing import Iterable, Sequence

from conelift.core.lattice import integer_kernel, rank
from conelift.core.vectors import IntMatrix, IntVector, leq

KER_111 = IntMatrix.from_rows([(1, 1, -1)])
KER_123 = IntMatrix.from_rows([(1, 2, -3)])
KER_1111 = IntMatrix.from_rows([(1, 1, -1, -1)])

# A lattice basis of ker([1 1 -1]) that is already triangular.
TRIANGULAR_111 = IntMatrix.from_rows([(1, 0, 1), (0, 1, 1)])


def random_matrix(
    rng: random.Random, nrows: int, ncols: int, low: int = -3, high: int = 3
) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(low, high) for _ in range(ncols)] for _ in range(nrows)], ncols
    )


def random_kernel_lattice(
    rng: random.Random, rows: Sequence[int] = (1, 2, 3), cols: Sequence[int] = (3, 4, 5)
) -> IntMatrix:
    """Generators of ker_Z(A) for A with entries in [-3, 3]."""
    A = random_matrix(rng, rng.choice(rows), rng.choice(cols))
    return integer_kernel(A)


def random_span(rng: random.Random, max_n: int = 6) -> IntMatrix:
    """A few random rows spanning a subspace of Q^n."""
    n = rng.randint(2, max_n)
    return random_matrix(rng, rng.randint(1, n), n, -2, 2)


def random_cone_generators(
    rng: random.Random, n: int, s: int, pointed: bool = False, high: int = 2
) -> IntMatrix:
    """
    Nonzero generators of full column rank (dual cone pointed), entries in
    [-high, high]. With pointed=True every generator has a positive first
    entry, so the cone itself is pointed as well.
    """
    while True:
        P = random_matrix(rng, s, n, -high, high)
        if pointed:
            P = IntMatrix(tuple((rng.randint(1, high),) + r[1:] for r in P.rows), n)
        if all(any(row) for row in P.rows) and rank(P) == n:
            return P


def assert_pairwise_incomparable(vectors: Iterable[IntVector]) -> None:
    items = list(vectors)
    for i, u in enumerate(items):
        for k, v in enumerate(items):
            if i != k:
                assert not leq(u, v), f"{u} <= {v}"


def assert_in_kernel(A: IntMatrix, vectors: Iterable[IntVector]) -> None:
    for v in vectors:
        assert not any(A.apply(v)), f"{v} not in ker(A)"
