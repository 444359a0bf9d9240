"""
Shared bench test fixtures:
  - Deterministic perf_counter for timing assertions
  - A stubbed BenchmarkRunner.run for CLI formatting tests
"""
from __future__ import annotations
import time

import pytest

from conelift.bench.engine import BenchmarkResult


@pytest.fixture
def patch_perf_counter(monkeypatch):
    """
    Make time.perf_counter deterministic by incrementing with a fixed delta.
    Opt-in: only used by tests that request it.
    """
    counter = {"v": 1000.0}

    def fake_counter():
        counter["v"] += 0.002  # 2 ms per call
        return counter["v"]

    monkeypatch.setattr(time, "perf_counter", fake_counter)
    return fake_counter


@pytest.fixture
def stub_runner_run(monkeypatch):
    """Stub BenchmarkRunner.run so the CLI does not execute real lifts."""
    import conelift.bench.runner as runner_mod

    fast = BenchmarkResult("min-pairs", [1.0, 2.0, 3.0], 5, 9, [1, 3, 9, 5])
    small = BenchmarkResult("max-zeros", [4.0], 5, 7, [1, 7, 5])

    def fake_run(self):
        return {
            "results": [fast, small],
            "fastest": fast,
            "smallest_peak": small,
            "basis_size": 5,
        }

    monkeypatch.setattr(runner_mod.BenchmarkRunner, "run", fake_run, raising=True)
    return fake_run
