"""File I/O operations for CSV and JSON results."""

import csv
import io
import json
import math
import os
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence

import numpy as np

from src.config import (
    CSV_DELIMITER,
    CSV_LINE_TERMINATOR,
    CSV_SIGNIFICANT_DIGITS,
    FILE_ENCODING,
    JSON_ENSURE_ASCII,
    JSON_INDENT,
    JSON_SORT_KEYS,
)


def format_cell(value: Any) -> str:
    """
    Render one CSV cell.

    Floats are written with 17 significant digits so they read back exactly;
    None becomes an empty cell; strings (already rounded values) pass through.

    Example:
        >>> format_cell(0.1)
        '0.10000000000000001'
        >>> format_cell(None)
        ''
    """
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(float(value), f".{CSV_SIGNIFICANT_DIGITS}g")
    return str(value)


def _json_default(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def render_csv(columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Render a header row and data rows as CSV text."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=CSV_DELIMITER, lineterminator=CSV_LINE_TERMINATOR)
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])
    return buffer.getvalue()


def render_json(data: Any) -> str:
    """Render data as JSON text with consistent formatting."""
    return json.dumps(
        data, ensure_ascii=JSON_ENSURE_ASCII, indent=JSON_INDENT, sort_keys=JSON_SORT_KEYS, default=_json_default
    ) + "\n"


def ensure_output_directory(directory: str) -> None:
    """
    Create output directory if it doesn't exist and handle permission errors gracefully.

    Args:
        directory: Path to the output directory

    Raises:
        NotADirectoryError: If the path exists but is a file
        PermissionError: If the directory cannot be created or written to
        OSError: If the directory cannot be created for other reasons

    Example:
        >>> ensure_output_directory("./runs")
    """
    dir_path = Path(directory)

    if dir_path.exists():
        if not dir_path.is_dir():
            raise NotADirectoryError(f"Path exists but is not a directory: {directory}")
        if not os.access(dir_path, os.W_OK):
            raise PermissionError(f"Directory is not writable: {directory}")
        return

    try:
        dir_path.mkdir(parents=True, exist_ok=True)
    except PermissionError as e:
        raise PermissionError(f"Cannot create directory due to insufficient permissions: {directory}") from e
    except OSError as e:
        raise OSError(f"Cannot create directory: {directory}") from e


def _emit(text: str, filepath: Optional[str]) -> str:
    if filepath is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return "<stdout>"
    file_path = Path(filepath)
    ensure_output_directory(str(file_path.parent))
    with open(file_path, "w", encoding=FILE_ENCODING, newline="") as f:
        f.write(text)
    return str(file_path)


def write_csv(columns: Sequence[str], rows: Sequence[Sequence[Any]], filepath: Optional[str] = None) -> str:
    """
    Write rows as CSV to a file, or to standard output when filepath is None.

    Returns:
        The destination that was written ("<stdout>" or the file path)

    Example:
        >>> write_csv(["x", "rho"], [[0.5, 1.0986122886681098]], "figure.csv")
        'figure.csv'
    """
    return _emit(render_csv(columns, rows), filepath)


def serialize_json(data: Any, filepath: Optional[str] = None) -> str:
    """
    Serialize JSON with consistent formatting.

    Format:
        - Indentation: From config (default: 2 spaces)
        - Keys: Sorted, so equal data gives byte-identical output
        - numpy arrays and scalars are converted to lists and Python numbers

    Returns:
        The destination that was written ("<stdout>" or the file path)
    """
    return _emit(render_json(data), filepath)


def records_to_dicts(columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> List[dict]:
    """Pair every row with the column names, for JSON output of tabular results."""
    return [dict(zip(columns, row)) for row in rows]
