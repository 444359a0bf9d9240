"""
conelift.bench
==============
Benchmarking tools comparing column strategies on magic-array lattices.
"""
from .config import BenchmarkConfig
from .engine import BenchmarkEngine, BenchmarkResult
from .analyzer import ResultAnalyzer
from .runner import BenchmarkRunner

__all__ = [
    "BenchmarkConfig",
    "BenchmarkEngine",
    "BenchmarkResult",
    "ResultAnalyzer",
    "BenchmarkRunner",
]
