from click.testing import CliRunner

from conelift.bench.cli import bench
from conelift.cli.main import cli


def test_bench_cli_formatting(stub_runner_run):
    result = CliRunner().invoke(bench, ["--side", "3", "--quiet"])
    assert result.exit_code == 0, result.output
    out = result.output
    assert "=== Benchmark: magic 3x3 ===" in out
    assert "basis size: 5" in out
    assert "min-pairs" in out and "sizes=[1,3,9,5]" in out
    assert "fastest: min-pairs" in out
    assert "smallest peak: max-zeros" in out


def test_bench_cli_real_run():
    args = ["bench", "--side", "2", "--rounds", "1", "--strategy", "input-order", "--quiet"]
    result = CliRunner().invoke(cli, args)
    assert result.exit_code == 0, result.output
    assert "basis size: 1" in result.output
    assert "fastest: input-order" in result.output


def test_bench_cli_invalid_rounds():
    result = CliRunner().invoke(cli, ["bench", "--side", "2", "--rounds", "0"])
    assert result.exit_code != 0
