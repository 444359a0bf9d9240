"""
End-to-end tests for the conelift command line. Exit codes are checked
through run(), which maps exceptions the way the console script does; output
formatting through click's CliRunner.
"""
from __future__ import annotations
from pathlib import Path

import pytest
from click.testing import CliRunner

from conelift.cli.main import (
    EXIT_COMPUTATION,
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    cli,
    run,
)
from conelift.utils.matrix_io import read_matrix

from tests_new.common.parsers import parse_blocks, parse_rows


def _write(path: Path, text: str) -> str:
    path.write_text(text)
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "A": _write(tmp_path / "A.mat", "# ker [1 1 -1]\n1 3\n1 1 -1\n"),
        "B": _write(tmp_path / "B.mat", "2 3\n1 0 1\n0 1 1\n"),
        "B4": _write(tmp_path / "B4.mat", "1 4\n1 1 -1 -1\n"),
        "P": _write(tmp_path / "P.mat", "2 2\n0 1\n2 1\n"),
        "LINE": _write(tmp_path / "L.mat", "2 2\n1 0\n-1 0\n"),
        "U": _write(tmp_path / "u.mat", "1 3\n2 1 3\n"),
        "AI": _write(tmp_path / "Ai.mat", "1 2\n1 -1\n"),
        "b": _write(tmp_path / "b.mat", "1 1\n0\n"),
        "c": _write(tmp_path / "c.mat", "1 2\n1 1\n"),
        "z0": _write(tmp_path / "z0.mat", "2 1\n1\n1\n"),
        "tmp": tmp_path,
    }


def _invoke(args):
    result = CliRunner().invoke(cli, args)
    assert result.exit_code == 0, result.output
    return result.output


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def test_hilbert_kernel_to_file(files):
    out = files["tmp"] / "H.mat"
    argv = ["hilbert", "--kernel", files["A"], "-o", str(out), "--quiet"]
    assert run(argv, env={}) == EXIT_OK
    H = read_matrix(out)
    assert H.rows == ((0, 1, 1), (1, 0, 1))


def test_hilbert_lattice_stdout(files):
    assert parse_rows(_invoke(["hilbert", "--lattice", files["B"]])) == [
        (0, 1, 1),
        (1, 0, 1),
    ]


def test_hilbert_truncated(files):
    args = ["hilbert", "--kernel", files["B4"], "--bounds", "1,1,1,1"]
    assert parse_rows(_invoke(args)) == [
        (0, 1, 0, 1),
        (0, 1, 1, 0),
        (1, 0, 0, 1),
        (1, 0, 1, 0),
    ]
    assert parse_rows(_invoke(args[:-1] + ["0,0,0,0"])) == []


def test_hilbert_verify_against_oracle(files):
    out = _invoke(
        ["hilbert", "--kernel", files["A"], "--verify", "4", "--engine", "completion"]
    )
    assert len(parse_rows(out)) == 2


def test_rays_sorted(files):
    rows = parse_rows(_invoke(["rays", "--kernel", files["B4"]]))
    assert rows == [(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0)]


def test_dual_blocks(files):
    blocks = parse_blocks(_invoke(["dual", files["P"]]))
    assert blocks["rays"] == [(-1, 2), (1, 0)]
    assert blocks["hilbert"] == [(-1, 2), (0, 1), (1, 0)]
    only_rays = parse_blocks(_invoke(["dual", files["P"], "--part", "rays"]))
    assert list(only_rays) == ["rays"]


def test_hilbert_from_gens(files):
    assert parse_rows(_invoke(["hilbert-from-gens", files["P"]])) == [
        (0, 1),
        (1, 1),
        (2, 1),
    ]


def test_decompose(files):
    argv = ["decompose", "--kernel", files["A"], "--target", files["U"]]
    blocks = parse_blocks(_invoke(argv))
    assert blocks["multiplicity element"] == [(1, 0, 1, 1), (2, 1, 0, 1)]


def test_improve(files):
    out = _invoke(
        [
            "improve",
            "--matrix", files["AI"],
            "--rhs", files["b"],
            "--cost", files["c"],
            "--start", files["z0"],
        ]
    )
    assert "# status: improved cost 0 (was 2)" in out
    assert parse_rows(out) == [(0, 0)]


def test_magic_system(files):
    rows = parse_rows(_invoke(["magic-system", "3"]))
    assert len(rows) == 7 and all(len(r) == 9 for r in rows)
    assert parse_rows(_invoke(["magic-system", "3", "--no-diagonals"])) != rows
    assert parse_rows(_invoke(["magic-system", "1"])) == []


def test_version():
    result = CliRunner().invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "conelift" in result.output


# ---------------------------------------------------------------------------
# Determinism
# ---------------------------------------------------------------------------

COMMANDS = [
    ["hilbert", "--kernel", "{A}"],
    ["hilbert", "--kernel", "{B4}", "--strategy", "min-pairs"],
    ["rays", "--kernel", "{B4}"],
    ["dual", "{P}"],
    ["hilbert-from-gens", "{P}"],
    ["decompose", "--kernel", "{A}", "--target", "{U}"],
    [
        "improve",
        "--matrix", "{AI}",
        "--rhs", "{b}",
        "--cost", "{c}",
        "--start", "{z0}",
    ],
    ["magic-system", "4"],
]


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: a[0])
def test_repeated_runs_byte_identical(files, args):
    argv = [a.format(**files) for a in args] + ["--threads", "4"]
    assert _invoke(argv) == _invoke(argv)


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: a[0])
def test_threads_match_single_thread(files, args):
    argv = [a.format(**files) for a in args]
    assert _invoke(argv + ["--threads", "4"]) == _invoke(argv)


@pytest.mark.parametrize(
    "args", [["rays", "--kernel", "{A}"], ["magic-system", "3"]], ids=lambda a: a[0]
)
def test_threads_validated_without_engine(files, args):
    argv = [a.format(**files) for a in args] + ["--threads", "0"]
    assert run(argv, env={}) == EXIT_USAGE


# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------

def test_exit_ok(files, capsys):
    assert run(["rays", "--lattice", files["B"]], env={}) == EXIT_OK
    assert capsys.readouterr().out.startswith("2 3\n")


def test_exit_usage_missing_input(capsys):
    assert run(["hilbert"], env={}) == EXIT_USAGE
    assert "exactly one of" in capsys.readouterr().err


def test_exit_usage_both_inputs(files):
    argv = ["hilbert", "--kernel", files["A"], "--lattice", files["B"]]
    assert run(argv, env={}) == EXIT_USAGE


def test_exit_usage_unknown_strategy(files, capsys):
    argv = ["hilbert", "--kernel", files["A"], "--strategy", "nope"]
    assert run(argv, env={}) == EXIT_USAGE
    assert "Unknown column strategy" in capsys.readouterr().err


def test_exit_usage_bad_matrix_file(tmp_path):
    bad = _write(tmp_path / "bad.mat", "2 2\n1 x\n")
    assert run(["rays", "--lattice", bad], env={}) == EXIT_USAGE


def test_exit_usage_bad_bounds(files):
    argv = ["hilbert", "--kernel", files["A"], "--bounds", "1,1"]
    assert run(argv, env={}) == EXIT_USAGE


def test_exit_usage_unknown_command():
    assert run(["nope"], env={}) == EXIT_USAGE


def test_exit_degenerate_dual(files, capsys):
    assert run(["dual", files["LINE"]], env={}) == EXIT_COMPUTATION
    assert "Error:" in capsys.readouterr().err


def test_exit_resource_guard(files):
    env = {"CONELIFT_ORACLE_BUDGET": "1"}
    argv = ["hilbert", "--kernel", files["A"], "--verify", "3"]
    assert run(argv, env=env) == EXIT_RESOURCE


def test_env_settings_supply_defaults(files):
    env = {"CONELIFT_ENGINE": "nope"}
    argv = ["hilbert", "--kernel", files["A"]]
    assert run(argv, env=env) == EXIT_USAGE
    assert run(argv + ["--engine", "graded"], env=env) == EXIT_OK
