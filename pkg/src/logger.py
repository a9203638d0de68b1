"""Logging and progress reporting for ModMetric commands.

Results are streamed to stdout, so every message here goes to stderr.
"""

import sys
from typing import Optional


def log_progress(message: str) -> None:
    """
    Log a progress message to stderr.

    Args:
        message: The progress message to display

    Example:
        >>> log_progress("Scanning 200 abscissas")
        Scanning 200 abscissas
    """
    print(message, file=sys.stderr)


def log_completion(command: str, destination: str) -> None:
    """
    Log a completion message with the output destination.

    Args:
        command: The subcommand that finished (e.g., "table", "figure")
        destination: Output path or "<stdout>"

    Example:
        >>> log_completion("figure", "<stdout>")
        ✓ figure completed -> <stdout>
    """
    print(f"✓ {command} completed -> {destination}", file=sys.stderr)


def log_error(message: str, error: Optional[Exception] = None) -> None:
    """
    Log an error message to stderr with optional exception details.

    Args:
        message: The error message to display
        error: Optional exception object for additional context

    Example:
        >>> log_error("Invalid point", ValueError("x = -y"))
        ✗ Error: Invalid point
        Details: x = -y
    """
    print(f"✗ Error: {message}", file=sys.stderr)
    if error:
        print(f"Details: {error}", file=sys.stderr)


def log_suite_start(suite: str) -> None:
    """
    Log the start of a property suite.

    Example:
        >>> log_suite_start("product_identity")
        → Running suite: product_identity
    """
    print(f"→ Running suite: {suite}", file=sys.stderr)


def log_summary(passed: int, total: int) -> None:
    """Log the pass count of a verification run."""
    symbol = "✓" if passed == total else "✗"
    print(f"{symbol} {passed}/{total} suites passed", file=sys.stderr)


def log_warning(message: str) -> None:
    """
    Log a warning message to stderr.

    Example:
        >>> log_warning("Remark threshold 0.75 is rounded")
        ⚠ Warning: Remark threshold 0.75 is rounded
    """
    print(f"⚠ Warning: {message}", file=sys.stderr)
