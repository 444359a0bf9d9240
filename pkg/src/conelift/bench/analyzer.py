from __future__ import annotations

from typing import Sequence

from .engine import BenchmarkResult


class ResultAnalyzer:
    """Pick winners among per-strategy benchmark results."""

    def fastest(self, results: Sequence[BenchmarkResult]) -> BenchmarkResult:
        return min(results, key=lambda r: (r.median, r.strategy))

    def smallest_peak(self, results: Sequence[BenchmarkResult]) -> BenchmarkResult:
        """Strategy with the smallest largest intermediate set H_j⁺."""
        return min(results, key=lambda r: (r.peak, r.median, r.strategy))

    def consistent(self, results: Sequence[BenchmarkResult]) -> bool:
        """All strategies must agree on the size of the final basis."""
        return len({r.basis_size for r in results}) <= 1
