import pytest

from conelift.core.lattice import integer_kernel
from conelift.core.vectors import IntMatrix
from conelift.exceptions import ArgumentError, ResourceLimitError
from conelift.oracle.brute import brute_hilbert, brute_rays, check_decomposition

from tests_new.common.helpers import KER_111, KER_1111, assert_pairwise_incomparable


def test_brute_hilbert_kernel_111():
    H = brute_hilbert(integer_kernel(KER_111), 6)
    assert H == [(0, 1, 1), (1, 0, 1)]


def test_brute_hilbert_identity():
    assert brute_hilbert(IntMatrix.identity(3), 3) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_brute_hilbert_empty_lattice():
    assert brute_hilbert(IntMatrix((), 2), 3) == []


def test_brute_hilbert_is_antichain():
    assert_pairwise_incomparable(brute_hilbert(integer_kernel(KER_1111), 4))


def test_brute_hilbert_budget():
    with pytest.raises(ResourceLimitError):
        brute_hilbert(IntMatrix.identity(4), 5, budget=10)
    assert brute_hilbert(IntMatrix.identity(2), 5, budget=None) == [(0, 1), (1, 0)]


def test_brute_hilbert_rejects_empty_box():
    with pytest.raises(ArgumentError):
        brute_hilbert(IntMatrix.identity(2), 0)


def test_brute_rays_examples():
    assert brute_rays(integer_kernel(KER_111)) == [(0, 1, 1), (1, 0, 1)]
    assert brute_rays(integer_kernel(KER_1111)) == [
        (0, 1, 0, 1),
        (0, 1, 1, 0),
        (1, 0, 0, 1),
        (1, 0, 1, 0),
    ]
    assert brute_rays(IntMatrix.identity(2)) == [(0, 1), (1, 0)]


def test_check_decomposition_examples():
    H = [(1, 0, 1), (0, 1, 1)]
    assert check_decomposition(H, (2, 1, 3))
    assert check_decomposition([], (0, 0, 0))
    assert not check_decomposition([(1, 0, 1)], (0, 1, 1))


def test_check_decomposition_backtracks():
    # Lexicographic greedy takes (0, 1) twice and is stuck at (1, 0).
    H = [(0, 1), (1, 2)]
    assert check_decomposition(H, (1, 2))
    assert not check_decomposition(H, (1, 1))


def test_check_decomposition_rejects_negative():
    with pytest.raises(ArgumentError):
        check_decomposition([(1, 0)], (-1, 0))
