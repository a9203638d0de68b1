"""Main entry point for ModMetric."""
import argparse
import sys
from typing import List, Optional

from src.config import (
    DEFAULT_ALPHA,
    DEFAULT_GRID,
    DEFAULT_HOLDER_EXPONENT,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_ROTATION_X,
    DEFAULT_ROTATION_Y,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    EXIT_ARGUMENT_ERROR,
    EXIT_ASSERTION_FAILURE,
    EXIT_SUCCESS,
    PRINTED_CROSSOVER_ABSCISSA,
    SUPPORTED_METRIC_KINDS,
    SUPPORTED_OUTPUT_FORMATS,
    SUPPORTED_PROBE_TARGETS,
    parse_complex_point,
)
from src.errors import ArgumentError, AssertionFailure
from src.file_io import records_to_dicts, serialize_json, write_csv
from src.harness import (
    CommandResult,
    RunConfig,
    cmd_figure,
    cmd_holder_probe,
    cmd_qc_check,
    cmd_rotation_scan,
    cmd_table,
    cmd_verify,
)
from src.logger import log_completion, log_error, log_progress, log_summary, log_warning


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"Seed of the random sampler (default: {DEFAULT_SEED})"
    )
    common.add_argument(
        "--samples",
        type=int,
        default=DEFAULT_SAMPLES,
        help=f"Random samples per property suite (default: {DEFAULT_SAMPLES})"
    )
    common.add_argument(
        "--grid",
        type=int,
        default=DEFAULT_GRID,
        help=f"Grid points of the figure and rotation scans (default: {DEFAULT_GRID})"
    )
    common.add_argument(
        "--tolerance",
        type=float,
        default=DEFAULT_TOLERANCE,
        help=f"Relative tolerance of identity checks (default: {DEFAULT_TOLERANCE})"
    )
    common.add_argument(
        "--output",
        choices=SUPPORTED_OUTPUT_FORMATS,
        default=DEFAULT_OUTPUT_FORMAT,
        help=f"Output format of tabular commands (default: {DEFAULT_OUTPUT_FORMAT})"
    )
    common.add_argument(
        "--out",
        default=None,
        metavar="PATH",
        help="Write results to PATH instead of standard output"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="modmetric",
        description="Evaluate and verify conformally invariant modulus metrics in the unit disk and half-space.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s table                                  # Reproduce the bracket comparison table
  %(prog)s figure --grid 400 --out figure.csv     # mu(x, 0) against its lower bounds
  %(prog)s holder-probe --w 0.25 --metric hyperbolic
  %(prog)s rotation-scan --x 0.6,0.3 --y 0.1,0.1
  %(prog)s verify --seed 7 --samples 2000         # Run every property suite
  %(prog)s qc-check --alpha 0.5
        """
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    subparsers.add_parser("table", parents=[common], help="Reproduce the comparison table of th(rho/2) bounds")
    subparsers.add_parser("figure", parents=[common], help="Scan mu(x, 0) and its quartic and linear lower bounds")

    holder = subparsers.add_parser("holder-probe", parents=[common], help="Probe divergence of the Hölder quotient")
    holder.add_argument(
        "--w",
        type=float,
        default=DEFAULT_HOLDER_EXPONENT,
        help=f"Hölder exponent (default: {DEFAULT_HOLDER_EXPONENT})"
    )
    holder.add_argument(
        "--metric",
        choices=SUPPORTED_METRIC_KINDS,
        default=SUPPORTED_METRIC_KINDS[0],
        help=f"Denominator distance (default: {SUPPORTED_METRIC_KINDS[0]})"
    )
    holder.add_argument(
        "--target",
        choices=SUPPORTED_PROBE_TARGETS,
        default=SUPPORTED_PROBE_TARGETS[0],
        help=f"Numerator of the quotient (default: {SUPPORTED_PROBE_TARGETS[0]})"
    )

    rotation = subparsers.add_parser("rotation-scan", parents=[common], help="Rotate a pair about its midpoint")
    rotation.add_argument(
        "--x",
        default=DEFAULT_ROTATION_X,
        metavar="RE,IM",
        help=f"First point (default: {DEFAULT_ROTATION_X})"
    )
    rotation.add_argument(
        "--y",
        default=DEFAULT_ROTATION_Y,
        metavar="RE,IM",
        help=f"Second point (default: {DEFAULT_ROTATION_Y})"
    )

    subparsers.add_parser("verify", parents=[common], help="Run every property and artifact suite")

    qc = subparsers.add_parser("qc-check", parents=[common], help="Check distortion under a radial stretch")
    qc.add_argument(
        "--alpha",
        type=float,
        default=DEFAULT_ALPHA,
        help=f"Stretch exponent in (0, 1] (default: {DEFAULT_ALPHA})"
    )

    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command line arguments.

    Args:
        argv: Argument list (default: sys.argv[1:])

    Returns:
        argparse.Namespace with the command name and its options
    """
    return build_parser().parse_args(argv)


def run_command(args: argparse.Namespace) -> CommandResult:
    """
    Dispatch parsed arguments to the matching harness command.

    Raises:
        ArgumentError: If an option value is out of range
    """
    cfg = RunConfig(
        seed=args.seed,
        samples=args.samples,
        grid=args.grid,
        tolerance=args.tolerance,
        output_format=args.output,
    )
    if args.command == "table":
        return cmd_table()
    if args.command == "figure":
        return cmd_figure(cfg)
    if args.command == "holder-probe":
        return cmd_holder_probe(args.w, args.metric, cfg, args.target)
    if args.command == "rotation-scan":
        return cmd_rotation_scan(complex(*parse_complex_point(args.x)), complex(*parse_complex_point(args.y)), cfg)
    if args.command == "verify":
        return cmd_verify(cfg)
    if args.command == "qc-check":
        return cmd_qc_check(args.alpha, cfg)
    raise ArgumentError(f"Unknown command: {args.command}")


def write_result(result: CommandResult, output_format: str, out: Optional[str]) -> str:
    """
    Write a command result and return its destination.

    Tabular results follow the requested format; verify and qc-check always
    emit their JSON report.
    """
    if not result.tabular:
        return serialize_json(result.summary, out)
    if output_format == "csv":
        return write_csv(result.columns, result.rows, out)
    return serialize_json({
        "command": result.command,
        "columns": result.columns,
        "rows": records_to_dicts(result.columns, result.rows),
        "summary": result.summary,
    }, out)


def main(argv: Optional[List[str]] = None) -> int:
    """Main function: parse, run one command, write its output and return the exit code."""
    args = parse_arguments(argv)

    try:
        result = run_command(args)
    except ArgumentError as e:
        log_error(f"Invalid arguments for '{args.command}'", e)
        return EXIT_ARGUMENT_ERROR

    if args.command == "figure":
        log_warning(
            f"The printed crossover abscissa {PRINTED_CROSSOVER_ABSCISSA} is rounded; "
            f"the exact value is {result.summary['exact_abscissa']:.6f}"
        )

    try:
        destination = write_result(result, args.output, args.out)
    except OSError as e:
        log_error(f"Failed to write results: {args.out}", e)
        return EXIT_ASSERTION_FAILURE

    if args.command == "verify":
        log_summary(result.summary["passed"], result.summary["total"])

    try:
        result.raise_for_failures()
    except AssertionFailure as e:
        log_error("Assertion failed", e)
        for failure in result.failures[:5]:
            log_progress(f"  ✗ {failure}")
        return EXIT_ASSERTION_FAILURE

    log_completion(args.command, destination)
    return EXIT_SUCCESS


if __name__ == "__main__":
    sys.exit(main())
