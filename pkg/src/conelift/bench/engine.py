# conelift/bench/engine.py
import statistics
import time
from dataclasses import dataclass, field

from conelift.bench.config import BenchmarkConfig
from conelift.core.vectors import IntVector
from conelift.hilbert.lift import LiftTrace, minimal_generators


@dataclass(frozen=True)
class BenchmarkResult:
    """Timings and intermediate set sizes for one column strategy."""

    strategy: str
    times: list[float]
    basis_size: int
    peak: int
    sizes: list[int]

    median: float = field(init=False)
    min: float = field(init=False)
    max: float = field(init=False)
    stddev: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "median", statistics.median(self.times))
        object.__setattr__(self, "min", min(self.times))
        object.__setattr__(self, "max", max(self.times))
        object.__setattr__(
            self, "stddev", statistics.pstdev(self.times) if len(self.times) > 1 else 0.0
        )

    def __repr__(self) -> str:
        return (
            f"<BenchmarkResult {self.strategy} median={self.median:.2f}ms "
            f"|H|={self.basis_size} peak={self.peak}>"
        )


class BenchmarkEngine:
    """Time minimal_generators on the configured lattice for one strategy."""

    def __init__(self, config: BenchmarkConfig):
        self.config = config

    def _time_once(self, strategy: str) -> tuple[float, list[IntVector], LiftTrace]:
        trace = LiftTrace()
        start = time.perf_counter()
        basis = minimal_generators(
            self.config.lattice,
            bounds=self.config.bounds(),
            strategy=strategy,
            engine=self.config.engine,
            trace=trace,
        )
        return (time.perf_counter() - start) * 1000, basis, trace

    def run(self, strategy: str) -> BenchmarkResult:
        times: list[float] = []
        basis: list[IntVector] = []
        trace = LiftTrace()
        for _ in range(self.config.rounds):
            ms, basis, trace = self._time_once(strategy)
            times.append(ms)
        return BenchmarkResult(strategy, times, len(basis), trace.peak, trace.sizes)
