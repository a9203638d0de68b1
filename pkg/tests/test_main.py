"""Tests for main entry point and CLI argument parsing."""

import csv
import io
import json
import sys
import tempfile
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from src.config import (
    DEFAULT_GRID,
    DEFAULT_ROTATION_X,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    EXIT_ARGUMENT_ERROR,
    EXIT_ASSERTION_FAILURE,
    EXIT_SUCCESS,
)
from src.harness import CommandResult
from src.main import main, parse_arguments


def test_parse_arguments_defaults():
    """Test that default options are set from config."""
    original_argv = sys.argv

    try:
        sys.argv = ["modmetric", "table"]
        args = parse_arguments()

        assert args.command == "table"
        assert args.seed == DEFAULT_SEED
        assert args.samples == DEFAULT_SAMPLES
        assert args.grid == DEFAULT_GRID
        assert args.tolerance == DEFAULT_TOLERANCE
        assert args.output == "csv"
        assert args.out is None
    finally:
        sys.argv = original_argv


def test_parse_arguments_holder_probe():
    """Test parsing the Hölder probe options."""
    original_argv = sys.argv

    try:
        sys.argv = ["modmetric", "holder-probe", "--w", "0.5", "--metric", "hyperbolic", "--target", "ferrand-inverse"]
        args = parse_arguments()

        assert args.w == 0.5
        assert args.metric == "hyperbolic"
        assert args.target == "ferrand-inverse"
    finally:
        sys.argv = original_argv


def test_parse_arguments_rotation_defaults():
    """Test that the rotation scan defaults to the first table pair."""
    args = parse_arguments(["rotation-scan"])
    assert args.x == DEFAULT_ROTATION_X


def test_parse_arguments_common_options():
    """Test common options after the subcommand."""
    args = parse_arguments(["verify", "--seed", "7", "--samples", "100", "--output", "json", "--out", "r.json"])
    assert args.seed == 7
    assert args.samples == 100
    assert args.output == "json"
    assert args.out == "r.json"


def test_parse_arguments_requires_command():
    """Test that a subcommand is required."""
    with pytest.raises(SystemExit) as exc_info:
        parse_arguments([])
    assert exc_info.value.code == EXIT_ARGUMENT_ERROR


def test_parse_arguments_rejects_unknown_metric():
    """Test that argparse rejects an unknown metric with exit code 2."""
    with pytest.raises(SystemExit) as exc_info:
        parse_arguments(["holder-probe", "--metric", "chordal"])
    assert exc_info.value.code == EXIT_ARGUMENT_ERROR


class TestMainCommands:
    """Tests for running commands through main."""

    def test_table_csv_to_stdout(self, capsys):
        """The table is written as CSV with a header row."""
        assert main(["table"]) == EXIT_SUCCESS
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0][:3] == ["row", "x", "y"]
        assert rows[1][3] == "0.575624"
        assert len(rows) == 3

    def test_table_json(self, capsys):
        """JSON output pairs rows with column names."""
        assert main(["table", "--output", "json"]) == EXIT_SUCCESS
        data = json.loads(capsys.readouterr().out)
        assert data["command"] == "table"
        assert data["rows"][1]["upper_midpoint"] == "0.999555"

    def test_figure_to_file(self):
        """--out writes the figure scan to a file, creating directories."""
        with tempfile.TemporaryDirectory() as temp_dir:
            output_path = Path(temp_dir) / "runs" / "figure.csv"
            assert main(["figure", "--grid", "30", "--out", str(output_path)]) == EXIT_SUCCESS
            lines = output_path.read_text(encoding="utf-8").splitlines()
            assert lines[0] == "x,rho,mu,lower_quartic,lower_linear,dominant"
            assert len(lines) == 31

    def test_figure_warns_about_rounded_threshold(self, capsys):
        """The rounded crossover abscissa is flagged on stderr."""
        main(["figure", "--grid", "10"])
        assert "0.75" in capsys.readouterr().err

    def test_qc_check_reports_json(self, capsys):
        """qc-check always emits its JSON report."""
        assert main(["qc-check", "--alpha", "0.5", "--samples", "100"]) == EXIT_SUCCESS
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True
        assert report["pairs"] == 100

    def test_rotation_scan(self, capsys):
        """The rotation scan runs on an explicit pair."""
        assert main(["rotation-scan", "--x", "0.5,0.3", "--y", "0.1,0.3", "--grid", "20"]) == EXIT_SUCCESS
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "nu,th_half_rho,rho,mu,in_disk"
        assert len(lines) == 21

    def test_failed_checks_exit_one(self, monkeypatch, capsys):
        """A command whose checks fail still writes its output and exits with code 1."""
        failing = CommandResult("table", columns=["row"], rows=[[1]], failures=[{"row": 1}])
        monkeypatch.setattr("src.main.cmd_table", lambda: failing)
        assert main(["table"]) == EXIT_ASSERTION_FAILURE
        captured = capsys.readouterr()
        assert captured.out == "row\n1\n"
        assert "Assertion failed" in captured.err

    @pytest.mark.parametrize("argv", [
        ["qc-check", "--alpha", "0"],
        ["qc-check", "--alpha", "1.5"],
        ["holder-probe", "--w", "-1"],
        ["rotation-scan", "--x", "0.5,0.1", "--y=-0.5,-0.1"],
        ["rotation-scan", "--x", "bad"],
        ["verify", "--seed", "-1"],
        ["figure", "--grid", "1"],
    ])
    def test_argument_errors_exit_two(self, argv, capsys):
        """Invalid option values exit with code 2 and write nothing to stdout."""
        assert main(argv) == EXIT_ARGUMENT_ERROR
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Error" in captured.err


class TestMainProperties:
    """Property-based tests for argument parsing."""

    @settings(max_examples=50)
    @given(seed=st.integers(min_value=0, max_value=2 ** 64 - 1))
    def test_seed_round_trips_through_parser(self, seed):
        """Any unsigned 64-bit seed is parsed unchanged."""
        assert parse_arguments(["verify", "--seed", str(seed)]).seed == seed
