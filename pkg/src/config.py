"""Configuration settings for ModMetric."""

import math
from typing import Tuple

from src.errors import ArgumentError

# ============================================================================
# SPECIAL FUNCTION CONFIGURATION
# ============================================================================

# AGM iteration stops once |a - b| <= AGM_RELATIVE_TOLERANCE * a
AGM_RELATIVE_TOLERANCE = 1e-15

# Hard cap on AGM iterations (convergence is quadratic)
AGM_MAX_ITERATIONS = 60

# Below this modulus the Grötzsch ring function uses log(4/r)
GROTZSCH_ASYMPTOTIC_THRESHOLD = 1e-12

# Absolute tolerance for the c_n quadrature
CN_QUADRATURE_TOLERANCE = 1e-10

# Subinterval limit handed to scipy.integrate.quad for c_n
CN_QUADRATURE_LIMIT = 200


# ============================================================================
# RUN CONFIGURATION (CLI defaults)
# ============================================================================

# Default seed of the property sampler (unsigned 64-bit)
DEFAULT_SEED = 42

# Default number of random samples per property suite
DEFAULT_SAMPLES = 10000

# Default number of grid points for figure and rotation scans
DEFAULT_GRID = 200

# Default tolerance for identity checks (relative)
DEFAULT_TOLERANCE = 1e-9

# Output formats understood by every streaming command
SUPPORTED_OUTPUT_FORMATS = ["csv", "json"]

# Default output format
DEFAULT_OUTPUT_FORMAT = "csv"

# Default stretch exponent for the quasiconformal check
DEFAULT_ALPHA = 0.5

# Default Hölder exponent for the divergence probe
DEFAULT_HOLDER_EXPONENT = 0.25

# Denominators of the Hölder probe quotient
SUPPORTED_METRIC_KINDS = ["euclidean", "hyperbolic"]

# Numerators of the Hölder probe quotient
SUPPORTED_PROBE_TARGETS = ["modulus", "ferrand-inverse"]

# Default point pair of the rotation scan (first row of the comparison table)
DEFAULT_ROTATION_X = "0.6,0.3"
DEFAULT_ROTATION_Y = "0.1,0.1"


# ============================================================================
# SAMPLING CONFIGURATION
# ============================================================================

# Random points are drawn uniformly from the disk of this radius
SAMPLING_RADIUS = 0.999

# Pairs with |x - y| or |x + y| below this value are rejected
SAMPLING_SEPARATION = 1e-6

# Absolute slack (scaled by max(1, |value|)) used for bracket containment
BRACKET_SLACK = 1e-12

# Slack for sampled triangle inequalities
TRIANGLE_SLACK = 1e-12

# Range of s for the functional identity suites
CAPACITY_ARG_RANGE = (1.0, 1000.0)

# Domain of the pdec monotonicity sampler (t range, p range, minimal gap)
PDEC_T_RANGE = (0.01, 5.0)
PDEC_P_RANGE = (0.1, 10.0)
PDEC_MIN_GAP = 1e-3

# Beyond this t, e^(-2t) leaves the normal float range and pdec uses its asymptotic form
PDEC_UNDERFLOW_T = 350.0

# Number of pairs handed to the quasiconformal suite inside cmd_verify
QC_VERIFY_PAIRS = 1000


# ============================================================================
# PROBE AND FIGURE CONFIGURATION
# ============================================================================

# Probe abscissas are x = 10^-k for k in this range (inclusive)
HOLDER_PROBE_EXPONENTS = (1, 12)

# Monotonicity of the quotient is asserted from this k onwards (at least)
HOLDER_MONOTONE_FROM = 3

# Exponents swept by the Hölder suite of cmd_verify
HOLDER_SUITE_EXPONENTS = (0.1, 0.25, 0.5, 1.0)

# Abscissa interval of the figure scan
FIGURE_INTERVAL = (0.01, 0.99)

# Hyperbolic distance at which the quartic and linear lower bounds cross
CROSSOVER_RHO = 2.0

# Crossover abscissa as commonly quoted, rounded to two decimals
PRINTED_CROSSOVER_ABSCISSA = 0.75


# ============================================================================
# COMPARISON TABLE CONFIGURATION
# ============================================================================

# Decimal places of the reproduced table
TABLE_DECIMALS = 6

# Point pairs of the comparison table and their printed values, in column
# order: lower midpoint, lower AVV, upper midpoint, upper AVV
TABLE_ROWS = [
    {
        "x": complex(0.6, 0.3),
        "y": complex(0.1, 0.1),
        "expected": (0.575624, 0.491855, 0.591776, 0.594959),
    },
    {
        "x": complex(-0.7, 0.7),
        "y": complex(0.65, -0.6),
        "expected": (0.997999, 0.999183, 0.999555, 0.999381),
    },
]

# Tolerance between unrounded values and the printed table
TABLE_TOLERANCE = 5e-7


# ============================================================================
# FILE FORMAT CONFIGURATION
# ============================================================================

# File encoding
FILE_ENCODING = "utf-8"

# CSV dialect
CSV_DELIMITER = ","
CSV_LINE_TERMINATOR = "\n"

# Significant digits for unrounded CSV columns
CSV_SIGNIFICANT_DIGITS = 17

# Keep non-ASCII characters literal in JSON output
JSON_ENSURE_ASCII = False

# JSON indentation (number of spaces)
JSON_INDENT = 2

# Sort keys alphabetically
JSON_SORT_KEYS = True


# ============================================================================
# EXIT CODES
# ============================================================================

EXIT_SUCCESS = 0
EXIT_ASSERTION_FAILURE = 1
EXIT_ARGUMENT_ERROR = 2


# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================

# Colour the verify progress bar when stderr is a terminal
ENABLE_COLORED_OUTPUT = True


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================

def validate_output_format(output_format: str) -> bool:
    """
    Check if an output format is supported.

    Example:
        >>> validate_output_format("csv")
        True
        >>> validate_output_format("xml")
        False
    """
    return output_format in SUPPORTED_OUTPUT_FORMATS


def validate_metric_kind(metric: str) -> bool:
    """Check if a Hölder probe denominator is supported."""
    return metric in SUPPORTED_METRIC_KINDS


def validate_probe_target(target: str) -> bool:
    """Check if a Hölder probe numerator is supported."""
    return target in SUPPORTED_PROBE_TARGETS


def parse_complex_point(text: str) -> Tuple[float, float]:
    """
    Parse a planar point given as "re,im".

    Args:
        text: Two comma separated reals, e.g. "0.6,0.3"

    Returns:
        Tuple (re, im)

    Raises:
        ArgumentError: If the text is not two finite reals

    Example:
        >>> parse_complex_point("0.6,0.3")
        (0.6, 0.3)
    """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise ArgumentError(f"Expected a point as 're,im', got: {text!r}")
    try:
        re_part, im_part = float(parts[0]), float(parts[1])
    except ValueError as e:
        raise ArgumentError(f"Point coordinates must be reals, got: {text!r}") from e
    if not (math.isfinite(re_part) and math.isfinite(im_part)):
        raise ArgumentError(f"Point coordinates must be finite, got: {text!r}")
    return re_part, im_part


def holder_monotone_start(w: float) -> int:
    """
    First probe exponent k from which the Hölder quotient is increasing.

    With mu(x) ~ log(4/x) the quotient behaves like x^-w / log(4/x), which
    has its minimum at x_w = 4 exp(-1/w).

    Example:
        >>> holder_monotone_start(0.25)
        3
        >>> holder_monotone_start(0.1)
        4
    """
    turning_point = 4.0 * math.exp(-1.0 / w)
    if turning_point >= 1.0:
        return HOLDER_MONOTONE_FROM
    return max(HOLDER_MONOTONE_FROM, math.ceil(math.log10(1.0 / turning_point)))
