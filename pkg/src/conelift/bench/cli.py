# conelift/bench/cli.py
import click

from conelift.bench.config import (
    DEFAULT_DIMS,
    DEFAULT_ROUNDS,
    DEFAULT_SIDE,
    BenchmarkConfig,
)
from conelift.bench.engine import BenchmarkResult
from conelift.bench.runner import BenchmarkRunner
from conelift.config import DEFAULTS


def _format_result_line(r: BenchmarkResult) -> str:
    sizes = ",".join(str(s) for s in r.sizes)
    return (
        f"  {r.strategy:<12} median={r.median:.2f} ms (min {r.min:.2f}, max {r.max:.2f}) "
        f"peak={r.peak} sizes=[{sizes}]"
    )


@click.command("bench")
@click.option("--side", default=DEFAULT_SIDE, show_default=True, help="Magic array side.")
@click.option("--dims", default=DEFAULT_DIMS, show_default=True, help="Array dimension.")
@click.option("--no-diagonals", is_flag=True, help="Omit the main diagonals.")
@click.option(
    "--strategy",
    "strategies",
    multiple=True,
    help="Strategy to benchmark (repeatable; default all).",
)
@click.option("--engine", default=DEFAULTS["CONELIFT_ENGINE"], show_default=True)
@click.option("--rounds", default=DEFAULT_ROUNDS, show_default=True, help="Timing rounds.")
@click.option("--bound", type=int, default=None, help="Uniform upper bound per entry.")
@click.option("--quiet", is_flag=True, help="No progress bar.")
def bench(
    side: int,
    dims: int,
    no_diagonals: bool,
    strategies: tuple[str, ...],
    engine: str,
    rounds: int,
    bound: int | None,
    quiet: bool,
) -> None:
    """Compare column strategies on a magic-array lattice."""
    config = BenchmarkConfig(
        side=side,
        dims=dims,
        diagonals=not no_diagonals,
        strategies=strategies,
        engine=engine,
        rounds=rounds,
        bound=bound,
    )
    result = BenchmarkRunner(config, progress=not quiet).run()

    click.echo(f"=== Benchmark: {config.label()} ===")
    click.echo(f"basis size: {result['basis_size']}")
    for r in result["results"]:
        click.echo(_format_result_line(r))
    click.echo(f"fastest: {result['fastest'].strategy}")
    click.echo(f"smallest peak: {result['smallest_peak'].strategy}")
