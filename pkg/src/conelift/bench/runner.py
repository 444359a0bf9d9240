# conelift/bench/runner.py
import logging
from typing import Any

from tqdm import tqdm

from conelift.bench.analyzer import ResultAnalyzer
from conelift.bench.config import BenchmarkConfig
from conelift.bench.engine import BenchmarkEngine, BenchmarkResult
from conelift.exceptions import ComputationError
from conelift.logging_config import logger


class BenchmarkRunner:
    def __init__(self, config: BenchmarkConfig, progress: bool = True):
        self.config = config
        self.progress = progress
        self.analyzer = ResultAnalyzer()
        self.engine = BenchmarkEngine(config)

    def run(self) -> dict[str, Any]:
        results = self._collect_results()
        if not self.analyzer.consistent(results):
            raise ComputationError(
                "Column strategies disagree on the basis size: "
                + ", ".join(f"{r.strategy}={r.basis_size}" for r in results)
            )
        fastest = self.analyzer.fastest(results)
        smallest = self.analyzer.smallest_peak(results)
        logger.info(
            "%s: fastest=%s (%.2f ms), smallest peak=%s (%d)",
            self.config.label(),
            fastest.strategy,
            fastest.median,
            smallest.strategy,
            smallest.peak,
        )
        return {
            "results": results,
            "fastest": fastest,
            "smallest_peak": smallest,
            "basis_size": results[0].basis_size if results else 0,
        }

    def _collect_results(self) -> list[BenchmarkResult]:
        results: list[BenchmarkResult] = []
        pkg_logger = logging.getLogger("conelift")
        prev_level = pkg_logger.level
        pkg_logger.setLevel(logging.ERROR)
        try:
            with tqdm(
                total=len(self.config.strategies),
                desc=f"Benchmarking {self.config.label()}",
                disable=None if self.progress else True,
            ) as bar:
                for strategy in self.config.strategies:
                    results.append(self.engine.run(strategy))
                    bar.update(1)
        finally:
            pkg_logger.setLevel(prev_level)
        return results
