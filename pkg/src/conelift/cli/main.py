# conelift/cli/main.py
from __future__ import annotations

import sys
from pathlib import Path
from typing import Any, Callable, Sequence

import click

from conelift.apps.decompose import decompose
from conelift.apps.dual import dual_cone, hilbert_from_generators
from conelift.apps.improve import improve_binary
from conelift.apps.magic import magic_array
from conelift.bench.cli import bench
from conelift.core.lattice import integer_kernel
from conelift.core.order import Bounds
from conelift.core.vectors import IntMatrix
from conelift.exceptions import (
    ArgumentError,
    ComputationError,
    ConeLiftError,
    ConfigValidationError,
    ResourceLimitError,
)
from conelift.hilbert.lift import minimal_generators
from conelift.logging_config import configure_logging, logger
from conelift.oracle.brute import brute_hilbert
from conelift.rays.lift import extreme_rays
from conelift.settings import LiftSettings, load_settings
from conelift.utils.matrix_io import format_matrix, read_matrix, read_vector
from conelift.version import __version__

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_RESOURCE = 3

_INPUT_FILE = click.Path(exists=True, dir_okay=False)


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _settings(ctx: click.Context, **overrides: Any) -> LiftSettings:
    """Environment settings with command-line values layered on top."""
    keyed = {
        f"CONELIFT_{k.upper()}": v for k, v in overrides.items() if v is not None
    }
    settings = load_settings(config_map=ctx.obj.get("env"), overrides=keyed)
    configure_logging("error" if ctx.obj["quiet"] else settings.log)
    return settings


def _emit(ctx: click.Context, text: str) -> None:
    output: str | None = ctx.obj.get("output")
    if output:
        Path(output).write_text(text)
        logger.info("Wrote %s", output)
    else:
        click.echo(text, nl=False)


def _lattice_input(lattice: str | None, kernel: str | None) -> IntMatrix:
    if (lattice is None) == (kernel is None):
        raise click.UsageError("Give exactly one of --lattice or --kernel")
    if lattice is not None:
        return read_matrix(lattice)
    return integer_kernel(read_matrix(kernel))  # type: ignore[arg-type]


def _output_options(fn: Callable) -> Callable:
    fn = click.option(
        "-o",
        "--output",
        type=click.Path(dir_okay=False),
        help="Output file (default stdout).",
    )(fn)
    fn = click.option("--quiet", is_flag=True, help="Only report errors.")(fn)
    return fn


def _lattice_options(fn: Callable) -> Callable:
    fn = click.option("--lattice", type=_INPUT_FILE, help="Lattice generators.")(fn)
    fn = click.option("--kernel", type=_INPUT_FILE, help="Matrix A; use ker(A).")(fn)
    fn = click.option("--strategy", default=None, help="Column selection strategy.")(fn)
    return fn


def _threads_option(fn: Callable) -> Callable:
    return click.option(
        "--threads", type=int, default=None, help="Candidate worker threads."
    )(fn)


def _engine_options(fn: Callable) -> Callable:
    fn = click.option("--engine", default=None, help="Lift step engine.")(fn)
    return _threads_option(fn)


def _prepare(ctx: click.Context, output: str | None, quiet: bool) -> None:
    ctx.obj["output"] = output
    ctx.obj["quiet"] = quiet or ctx.obj.get("quiet", False)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

@click.group()
@click.version_option(__version__, prog_name="conelift")
@click.pass_context
def cli(ctx: click.Context) -> None:
    """Hilbert bases and extreme rays of lattice cones by project-and-lift."""
    ctx.ensure_object(dict)


@cli.command("hilbert")
@_lattice_options
@_engine_options
@click.option("--bounds", default=None, help="Upper bounds, e.g. 1,1,inf.")
@click.option(
    "--verify", type=int, default=None, help="Cross-check against the box oracle."
)
@_output_options
@click.pass_context
def hilbert_cmd(
    ctx: click.Context,
    lattice: str | None,
    kernel: str | None,
    strategy: str | None,
    engine: str | None,
    threads: int | None,
    bounds: str | None,
    verify: int | None,
    output: str | None,
    quiet: bool,
) -> None:
    """Minimal generators of the lattice monoid Λ ∩ ℝ₊ⁿ."""
    _prepare(ctx, output, quiet)
    settings = _settings(ctx, strategy=strategy, engine=engine, threads=threads)
    generators = _lattice_input(lattice, kernel)
    limits = Bounds.parse(bounds) if bounds else None
    result = minimal_generators(
        generators,
        bounds=limits,
        strategy=settings.strategy,
        engine=settings.engine,
        threads=settings.threads,
        progress=not ctx.obj["quiet"],
    )
    if verify is not None:
        expected = [
            h
            for h in brute_hilbert(generators, verify, budget=settings.oracle_budget)
            if limits is None or limits.admits(h)
        ]
        inside = [h for h in result if max(h) <= verify]
        if expected != inside:
            raise ComputationError(
                f"Box oracle disagrees: {len(expected)} expected, {len(inside)} computed"
            )
        logger.info("Verified against the box oracle (box=%d)", verify)
    _emit(ctx, format_matrix(result, generators.ncols))


@cli.command("rays")
@_lattice_options
@_threads_option
@_output_options
@click.pass_context
def rays_cmd(
    ctx: click.Context,
    lattice: str | None,
    kernel: str | None,
    strategy: str | None,
    threads: int | None,
    output: str | None,
    quiet: bool,
) -> None:
    """Extreme rays of span(generators) ∩ ℝ₊ⁿ."""
    _prepare(ctx, output, quiet)
    # Ray completion runs sequentially; threads is only validated here.
    settings = _settings(ctx, strategy=strategy, threads=threads)
    generators = _lattice_input(lattice, kernel)
    result = extreme_rays(
        generators, strategy=settings.strategy, progress=not ctx.obj["quiet"]
    )
    _emit(ctx, format_matrix(result, generators.ncols))


@cli.command("dual")
@click.argument("genfile", type=_INPUT_FILE)
@click.option(
    "--part",
    type=click.Choice(["both", "rays", "hilbert"]),
    default="both",
    show_default=True,
)
@_engine_options
@_output_options
@click.pass_context
def dual_cmd(
    ctx: click.Context,
    genfile: str,
    part: str,
    engine: str | None,
    threads: int | None,
    output: str | None,
    quiet: bool,
) -> None:
    """Facet normals and Hilbert basis of the dual of cone(rows of GENFILE)."""
    _prepare(ctx, output, quiet)
    settings = _settings(ctx, engine=engine, threads=threads)
    P = read_matrix(genfile)
    result = dual_cone(
        P,
        compute_rays=part in ("both", "rays"),
        compute_hilbert=part in ("both", "hilbert"),
        strategy=settings.strategy,
        engine=settings.engine,
        threads=settings.threads,
    )
    blocks = []
    if part in ("both", "rays"):
        blocks.append(format_matrix(result.rays, P.ncols, comments=["rays"]))
    if part in ("both", "hilbert"):
        blocks.append(format_matrix(result.hilbert, P.ncols, comments=["hilbert"]))
    _emit(ctx, "".join(blocks))


@cli.command("hilbert-from-gens")
@click.argument("genfile", type=_INPUT_FILE)
@_engine_options
@_output_options
@click.pass_context
def hilbert_from_gens_cmd(
    ctx: click.Context,
    genfile: str,
    engine: str | None,
    threads: int | None,
    output: str | None,
    quiet: bool,
) -> None:
    """Hilbert basis of ℤⁿ ∩ cone(rows of GENFILE)."""
    _prepare(ctx, output, quiet)
    settings = _settings(ctx, engine=engine, threads=threads)
    P = read_matrix(genfile)
    result = hilbert_from_generators(
        P, strategy=settings.strategy, engine=settings.engine, threads=settings.threads
    )
    _emit(ctx, format_matrix(result, P.ncols))


@cli.command("decompose")
@click.option("--kernel", required=True, type=_INPUT_FILE)
@click.option("--target", required=True, type=_INPUT_FILE)
@_engine_options
@_output_options
@click.pass_context
def decompose_cmd(
    ctx: click.Context,
    kernel: str,
    target: str,
    engine: str | None,
    threads: int | None,
    output: str | None,
    quiet: bool,
) -> None:
    """Write TARGET ∈ ker(A) as a sum of Hilbert basis elements."""
    _prepare(ctx, output, quiet)
    settings = _settings(ctx, engine=engine, threads=threads)
    A = read_matrix(kernel)
    result = decompose(
        A,
        read_vector(target),
        strategy=settings.strategy,
        engine=settings.engine,
        threads=settings.threads,
    )
    rows = [(m,) + v for v, m in result.terms]
    _emit(ctx, format_matrix(rows, A.ncols + 1, comments=["multiplicity element"]))


@cli.command("improve")
@click.option("--matrix", required=True, type=_INPUT_FILE)
@click.option("--rhs", required=True, type=_INPUT_FILE)
@click.option("--cost", required=True, type=_INPUT_FILE)
@click.option("--start", required=True, type=_INPUT_FILE)
@_engine_options
@_output_options
@click.pass_context
def improve_cmd(
    ctx: click.Context,
    matrix: str,
    rhs: str,
    cost: str,
    start: str,
    engine: str | None,
    threads: int | None,
    output: str | None,
    quiet: bool,
) -> None:
    """One improvement step for a 0-1 program from a feasible start point."""
    _prepare(ctx, output, quiet)
    settings = _settings(ctx, engine=engine, threads=threads)
    A = read_matrix(matrix)
    result = improve_binary(
        A,
        read_vector(rhs),
        read_vector(cost),
        read_vector(start),
        strategy=settings.strategy,
        engine=settings.engine,
        threads=settings.threads,
    )
    status = f"status: {result.status} cost {result.cost} (was {result.previous_cost})"
    _emit(ctx, format_matrix([result.solution], A.ncols, comments=[status]))


@cli.command("magic-system")
@click.argument("n", type=click.IntRange(min=1))
@click.option("--dims", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--no-diagonals", is_flag=True, help="Omit the main diagonals.")
@_threads_option
@_output_options
@click.pass_context
def magic_system_cmd(
    ctx: click.Context,
    n: int,
    dims: int,
    no_diagonals: bool,
    threads: int | None,
    output: str | None,
    quiet: bool,
) -> None:
    """Equality system A with ker(A) ∩ ℤ₊ = magic arrays of side N."""
    _prepare(ctx, output, quiet)
    _settings(ctx, threads=threads)
    A = magic_array(n, dims, diagonals=not no_diagonals)
    _emit(ctx, format_matrix(A.rows, A.ncols))


cli.add_command(bench)


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

def run(argv: Sequence[str] | None = None, env: dict[str, str] | None = None) -> int:
    """Run the CLI and map failures onto exit codes."""
    try:
        rv = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="conelift",
            standalone_mode=False,
            obj={"env": env},
        )
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted.", err=True)
        return EXIT_USAGE
    except ResourceLimitError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_RESOURCE
    except (ArgumentError, ConfigValidationError) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    except ConeLiftError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_COMPUTATION
    return rv if isinstance(rv, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
