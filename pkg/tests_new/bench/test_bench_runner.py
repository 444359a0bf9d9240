import logging

import pytest

from conelift.bench.config import BenchmarkConfig
from conelift.bench.engine import BenchmarkEngine, BenchmarkResult
from conelift.bench.runner import BenchmarkRunner
from conelift.exceptions import ComputationError


def test_runner_magic_three():
    config = BenchmarkConfig(side=3, rounds=1)
    result = BenchmarkRunner(config, progress=False).run()
    assert result["basis_size"] == 5
    assert [r.strategy for r in result["results"]] == list(config.strategies)
    assert result["fastest"] in result["results"]
    assert result["smallest_peak"].peak == min(r.peak for r in result["results"])


def test_runner_restores_logger_level():
    pkg_logger = logging.getLogger("conelift")
    pkg_logger.setLevel(logging.DEBUG)
    BenchmarkRunner(BenchmarkConfig(side=2, rounds=1), progress=False).run()
    assert pkg_logger.level == logging.DEBUG


def test_runner_rejects_inconsistent_strategies(monkeypatch):
    sizes = iter([5, 6, 5])

    def fake_run(self, strategy):
        return BenchmarkResult(strategy, [1.0], next(sizes), 3, [3])

    monkeypatch.setattr(BenchmarkEngine, "run", fake_run)
    with pytest.raises(ComputationError):
        BenchmarkRunner(BenchmarkConfig(side=2, rounds=1), progress=False).run()
