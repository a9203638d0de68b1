"""Commands that reproduce the numeric artifacts: the comparison table, the
lower-bound crossover scan, the Hölder divergence probe, the midpoint
rotation scan, the property sweep and the quasiconformal distortion check.

Each cmd_* function returns a CommandResult; rendering and exit codes are
left to src.main.
"""

import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Any, Dict, List, Optional

import numpy as np
from scipy import optimize

from src.bounds import (
    mu_lower_linear,
    mu_lower_quartic,
    rho_bounds_avv,
    rho_bounds_midpoint,
)
from src.config import (
    BRACKET_SLACK,
    CROSSOVER_RHO,
    DEFAULT_GRID,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_ROTATION_X,
    DEFAULT_ROTATION_Y,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    ENABLE_COLORED_OUTPUT,
    FIGURE_INTERVAL,
    HOLDER_MONOTONE_FROM,
    HOLDER_PROBE_EXPONENTS,
    HOLDER_SUITE_EXPONENTS,
    PRINTED_CROSSOVER_ABSCISSA,
    SUPPORTED_METRIC_KINDS,
    SUPPORTED_OUTPUT_FORMATS,
    SUPPORTED_PROBE_TARGETS,
    TABLE_DECIMALS,
    TABLE_ROWS,
    TABLE_TOLERANCE,
    holder_monotone_start,
    parse_complex_point,
    validate_metric_kind,
    validate_output_format,
    validate_probe_target,
)
from src.errors import ArgumentError, AssertionFailure, DomainError
from src.geom import UNIT_DISK, PointLike, as_planar_point, rho_ball, rotation_params, th_half_rho_rotated
from src.logger import log_suite_start
from src.metrics import lambda_metric, mu_from_th, mu_metric, qc_lambda_distortion, qc_mu_distortion
from src.progress_bar import ProgressBar, create_progress_callback
from src.sampling import make_generator, sample_pairs
from src.specfun import grotzsch_mu_upper_log
from src.verification import PROPERTY_SUITES, Suite, SuiteResult, build_report, run_suites

ENDPOINT_TOLERANCE = 1e-12
CROSSOVER_RHO_TOLERANCE = 1e-9
MAX_SEED = 2 ** 64 - 1


# ============================================================================
# RECORD TYPES
# ============================================================================

@dataclass(frozen=True)
class RunConfig:
    """Options shared by every command."""
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    grid: int = DEFAULT_GRID
    tolerance: float = DEFAULT_TOLERANCE
    output_format: str = DEFAULT_OUTPUT_FORMAT

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed <= MAX_SEED:
            raise ArgumentError(f"Seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if isinstance(self.samples, bool) or not isinstance(self.samples, int) or self.samples < 1:
            raise ArgumentError(f"Samples must be a positive integer, got {self.samples!r}")
        if isinstance(self.grid, bool) or not isinstance(self.grid, int) or self.grid < 2:
            raise ArgumentError(f"Grid must be an integer >= 2, got {self.grid!r}")
        if not (self.tolerance > 0.0 and math.isfinite(self.tolerance)):
            raise ArgumentError(f"Tolerance must be a finite positive real, got {self.tolerance!r}")
        if not validate_output_format(self.output_format):
            raise ArgumentError(
                f"Unsupported output format: {self.output_format}. Supported: {', '.join(SUPPORTED_OUTPUT_FORMATS)}"
            )


@dataclass
class ProbeRecord:
    """One row of a scan: an exact value, its bounds and an optional quotient."""
    abscissa: float
    exact: float
    bound_low: float
    bound_high: Optional[float] = None
    quotient: Optional[float] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def is_consistent(self, slack: float = BRACKET_SLACK) -> bool:
        """bound_low <= exact <= bound_high, each side relaxed by slack * max(1, |exact|)."""
        tolerance = slack * max(1.0, abs(self.exact))
        if self.bound_low > self.exact + tolerance:
            return False
        return self.bound_high is None or self.exact <= self.bound_high + tolerance


@dataclass
class CommandResult:
    """
    Output of one command.

    Tabular commands fill columns and rows; report commands leave them empty
    and put everything in summary.
    """
    command: str
    columns: List[str] = field(default_factory=list)
    rows: List[List[Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def tabular(self) -> bool:
        return bool(self.columns)

    def raise_for_failures(self) -> None:
        """Raise AssertionFailure carrying the first failing sample, if any."""
        if self.failures:
            raise AssertionFailure(f"{self.command}: {len(self.failures)} check(s) failed", self.failures[0])


def round_half_up(value: float, decimals: int = TABLE_DECIMALS) -> str:
    """
    Round half away from zero and format with a fixed number of decimals.

    Example:
        >>> round_half_up(0.5756245)
        '0.575625'
    """
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def _format_complex(z: complex) -> str:
    return f"{z.real:g}{z.imag:+g}i"


# ============================================================================
# TABLE
# ============================================================================

TABLE_COLUMNS = [
    "row", "x", "y",
    "lower_midpoint", "lower_avv", "upper_midpoint", "upper_avv",
    "tighter_lower", "tighter_upper", "th_half_rho",
]


def cmd_table() -> CommandResult:
    """
    The two-row comparison of the midpoint-rotation and AVV brackets on th(rho/2).

    Every bound is rounded half-up to six decimals and compared with the
    printed values.
    """
    result = CommandResult("table", columns=list(TABLE_COLUMNS))
    unrounded_rows = []

    for index, entry in enumerate(TABLE_ROWS, start=1):
        x, y = entry["x"], entry["y"]
        midpoint, avv = rho_bounds_midpoint(x, y), rho_bounds_avv(x, y)
        th, _ = UNIT_DISK.th_sech_half_rho(x, y)
        values = (midpoint.lower, avv.lower, midpoint.upper, avv.upper)

        for column, value, expected in zip(TABLE_COLUMNS[3:7], values, entry["expected"]):
            if value is None or abs(value - expected) > TABLE_TOLERANCE:
                result.failures.append({"row": index, "column": column, "value": value, "expected": expected})
        for bounds in (midpoint, avv):
            if not bounds.contains(th):
                result.failures.append({"row": index, "bracket": bounds.source.value, "th_half_rho": th})

        tighter_upper = "avv" if midpoint.upper is None or avv.upper < midpoint.upper else "midpoint"
        result.rows.append([
            index,
            _format_complex(x),
            _format_complex(y),
            *[None if value is None else round_half_up(value) for value in values],
            "midpoint" if midpoint.lower > avv.lower else "avv",
            tighter_upper,
            round_half_up(th),
        ])
        unrounded_rows.append({"row": index, "values": list(values), "expected": list(entry["expected"])})

    result.summary = {"decimals": TABLE_DECIMALS, "tolerance": TABLE_TOLERANCE, "unrounded": unrounded_rows}
    return result


# ============================================================================
# FIGURE
# ============================================================================

FIGURE_COLUMNS = ["x", "rho", "mu", "lower_quartic", "lower_linear", "dominant"]


def _radial_rho(x: float) -> float:
    return rho_ball([x, 0.0], [0.0, 0.0])


def _lower_gap(x: float) -> float:
    rho = _radial_rho(x)
    return mu_lower_quartic(rho) - mu_lower_linear(rho)


def figure_records(cfg: RunConfig) -> List[ProbeRecord]:
    """mu(x, 0) and both lower bounds over the figure interval."""
    records = []
    for x in np.linspace(*FIGURE_INTERVAL, cfg.grid).tolist():
        rho = _radial_rho(x)
        quartic, linear = mu_lower_quartic(rho), mu_lower_linear(rho)
        records.append(ProbeRecord(
            abscissa=x,
            exact=mu_metric(UNIT_DISK, [x, 0.0], [0.0, 0.0]),
            bound_low=max(quartic, linear),
            extra={"rho": rho, "quartic": quartic, "linear": linear},
        ))
    return records


def cmd_figure(cfg: RunConfig) -> CommandResult:
    """
    mu(x, 0) against its quartic and linear lower bounds for x in [0.01, 0.99].

    The abscissa where the two lower bounds swap order is located by Brent's
    method between the bracketing grid points; it lies at rho(x, 0) = 2,
    i.e. x = th(1).
    """
    result = CommandResult("figure", columns=list(FIGURE_COLUMNS))
    records = figure_records(cfg)
    gaps = [record.extra["quartic"] - record.extra["linear"] for record in records]

    for record, gap in zip(records, gaps):
        if not record.is_consistent():
            result.failures.append({"x": record.abscissa, "mu": record.exact, "lower": record.bound_low})
        result.rows.append([
            record.abscissa, record.extra["rho"], record.exact,
            record.extra["quartic"], record.extra["linear"],
            "quartic" if gap > 0.0 else "linear",
        ])

    switches = []
    for left, right, gap_left, gap_right in zip(records, records[1:], gaps, gaps[1:]):
        if gap_left > 0.0 >= gap_right or gap_left < 0.0 <= gap_right:
            switches.append(optimize.brentq(_lower_gap, left.abscissa, right.abscissa, xtol=1e-15))

    switch = switches[0] if len(switches) == 1 else None
    switch_rho = None if switch is None else _radial_rho(switch)
    if switch is None:
        result.failures.append({"check": "unique ordering switch", "switches": switches})
    elif abs(switch_rho - CROSSOVER_RHO) > CROSSOVER_RHO_TOLERANCE:
        result.failures.append({"check": "switch at rho = 2", "switch_rho": switch_rho})

    result.summary = {
        "switch_count": len(switches),
        "switch_abscissa": switch,
        "switch_rho": switch_rho,
        "exact_abscissa": math.tanh(0.5 * CROSSOVER_RHO),
        "printed_abscissa": PRINTED_CROSSOVER_ABSCISSA,
        "printed_abscissa_is_rounded": True,
    }
    return result


# ============================================================================
# HÖLDER DIVERGENCE PROBE
# ============================================================================

HOLDER_COLUMNS = ["k", "x", "numerator", "denominator", "quotient", "quotient_minorant"]


def holder_records(w: float, metric: str, target: str) -> List[ProbeRecord]:
    """
    Quotients numerator(x, 0) / denominator(x, 0)^w along x = 10^-k.

    The numerator is mu_B2(x, 0) or 1/lambda_B2(x, 0); the denominator is |x|
    or rho(x, 0). Since mu(r) <= U(r), mu_B2(x, 0) >= 2 pi / U(x), which
    gives the analytic minorant of each quotient.
    """
    first, last = HOLDER_PROBE_EXPONENTS
    records = []
    for k in range(first, last + 1):
        x = 10.0 ** -k
        point, origin = [x, 0.0], [0.0, 0.0]
        if target == "modulus":
            numerator = mu_metric(UNIT_DISK, point, origin)
            numerator_minorant = 2.0 * math.pi / grotzsch_mu_upper_log(x)
        else:
            numerator = 1.0 / lambda_metric(UNIT_DISK, point, origin)
            numerator_minorant = 0.5 * math.pi / grotzsch_mu_upper_log(x)
        denominator = (x if metric == "euclidean" else rho_ball(point, origin)) ** w
        records.append(ProbeRecord(
            abscissa=x,
            exact=numerator,
            bound_low=numerator_minorant,
            quotient=numerator / denominator,
            extra={"k": k, "denominator": denominator, "quotient_minorant": numerator_minorant / denominator},
        ))
    return records


def cmd_holder_probe(w: float, metric: str, cfg: RunConfig, target: str = "modulus") -> CommandResult:
    """
    Divergence of mu_B2(x, 0) / d(x, 0)^w as x -> 0, for d Euclidean or hyperbolic.

    The quotient must exceed its minorant at every row and increase strictly
    from the first k past the quotient's turning point (k = 3 for w >= 0.25).

    Raises:
        ArgumentError: If w <= 0 or metric/target is unknown
    """
    if not (w > 0.0 and math.isfinite(w)):
        raise ArgumentError(f"Hölder exponent must be a finite positive real, got w = {w}")
    if not validate_metric_kind(metric):
        raise ArgumentError(f"Unsupported metric: {metric}. Supported: {', '.join(SUPPORTED_METRIC_KINDS)}")
    if not validate_probe_target(target):
        raise ArgumentError(f"Unsupported probe target: {target}. Supported: {', '.join(SUPPORTED_PROBE_TARGETS)}")

    result = CommandResult("holder-probe", columns=list(HOLDER_COLUMNS))
    records = holder_records(w, metric, target)
    start = holder_monotone_start(w)

    for record in records:
        minorant = record.extra["quotient_minorant"]
        if minorant > record.quotient * (1.0 + BRACKET_SLACK):
            result.failures.append({"k": record.extra["k"], "quotient": record.quotient, "minorant": minorant})
        result.rows.append([
            record.extra["k"], record.abscissa, record.exact,
            record.extra["denominator"], record.quotient, minorant,
        ])

    by_k = {record.extra["k"]: record.quotient for record in records}
    increasing = True
    for k in range(start, HOLDER_PROBE_EXPONENTS[1]):
        if not by_k[k + 1] > by_k[k]:
            increasing = False
            result.failures.append({"check": "quotient increasing", "k": k, "quotient": [by_k[k], by_k[k + 1]]})

    result.summary = {
        "w": w,
        "metric": metric,
        "target": target,
        "monotone_from": start,
        "increasing": increasing,
        "divergence_ratio": by_k[HOLDER_PROBE_EXPONENTS[1]] / by_k[HOLDER_MONOTONE_FROM],
    }
    return result


# ============================================================================
# ROTATION SCAN
# ============================================================================

ROTATION_COLUMNS = ["nu", "th_half_rho", "rho", "mu", "in_disk"]


def cmd_rotation_scan(x: PointLike, y: PointLike, cfg: RunConfig) -> CommandResult:
    """
    Rotate a pair about its Euclidean midpoint through nu in [0, pi/2].

    th(rho/2), rho and mu are nonincreasing along the scan; at nu = 0 and
    nu = pi/2 th(rho/2) meets the closed-form midpoint bounds. Rows whose
    rotated points leave the disk (possible when k + d >= 1) carry the
    parametric th only.

    Raises:
        ArgumentError: If x = y, x = -y or a point is outside the disk
    """
    try:
        x, y = as_planar_point(x), as_planar_point(y)
        params = rotation_params(x, y)
        bounds = rho_bounds_midpoint(x, y)
    except DomainError as e:
        raise ArgumentError(f"Rotation scan needs a nondegenerate pair in the unit disk: {e}") from e

    result = CommandResult("rotation-scan", columns=list(ROTATION_COLUMNS))
    d, k = params.d, params.k
    previous: Dict[str, float] = {}

    for nu in np.linspace(0.0, 0.5 * math.pi, cfg.grid).tolist():
        th = th_half_rho_rotated(params.at(nu))
        in_disk = d * d + k * k + 2.0 * k * d * math.cos(nu) < 1.0
        rho = mu = None
        if in_disk and th < 1.0:
            rho, mu = 2.0 * math.atanh(th), mu_from_th(th)
        for column, value in (("th_half_rho", th), ("rho", rho), ("mu", mu)):
            if value is None:
                continue
            if column in previous and value > previous[column]:
                result.failures.append({"check": f"{column} nonincreasing", "nu": nu, "value": value})
            previous[column] = value
        result.rows.append([nu, th, rho, mu, in_disk])

    native_th, _ = UNIT_DISK.th_sech_half_rho(x, y)
    checks = [("native", th_half_rho_rotated(params), native_th), ("nu=pi/2", result.rows[-1][1], bounds.lower)]
    if bounds.upper is not None:
        checks.append(("nu=0", result.rows[0][1], bounds.upper))
    for name, value, reference in checks:
        if abs(value - reference) > ENDPOINT_TOLERANCE:
            result.failures.append({"check": f"endpoint {name}", "value": value, "reference": reference})

    result.summary = {
        "x": x.tolist(),
        "y": y.tolist(),
        "d": d,
        "k": k,
        "native_nu": params.nu,
        "native_th_half_rho": native_th,
        "lower_bound": bounds.lower,
        "upper_bound": bounds.upper,
    }
    return result


# ============================================================================
# QUASICONFORMAL CHECK
# ============================================================================

def cmd_qc_check(alpha: float, cfg: RunConfig) -> CommandResult:
    """
    Distortion of mu_B2 and lambda_B2 under the radial stretch with exponent alpha.

    Raises:
        ArgumentError: If alpha is outside (0, 1]
    """
    if not (0.0 < alpha <= 1.0):
        raise ArgumentError(f"Stretch exponent must lie in (0, 1], got alpha = {alpha}")

    pairs = sample_pairs(make_generator(cfg.seed), cfg.samples)
    modulus, ferrand = qc_mu_distortion(alpha, pairs), qc_lambda_distortion(alpha, pairs)
    result = CommandResult("qc-check")
    for report in (modulus, ferrand):
        if not report.passed:
            result.failures.append({"metric": report.metric, "violations": report.violations, "worst_pair": report.worst_pair})

    result.summary = {
        "alpha": alpha,
        "seed": cfg.seed,
        "pairs": len(pairs),
        "allowed_range": [alpha, 1.0 / alpha],
        "modulus": modulus.to_dict(),
        "ferrand": ferrand.to_dict(),
        "passed": result.passed,
    }
    return result


# ============================================================================
# VERIFY
# ============================================================================

def _command_suite(name: str, run) -> Suite:
    def suite(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
        outcome = SuiteResult(name)
        for command in run():
            outcome.record(command.passed, {"command": command.command, "failures": command.failures[:3]})
        return outcome
    return Suite(name, suite)


def artifact_suites(cfg: RunConfig) -> List[Suite]:
    """Suites that rerun the table, figure, probe and scan commands."""
    default_x = complex(*parse_complex_point(DEFAULT_ROTATION_X))
    default_y = complex(*parse_complex_point(DEFAULT_ROTATION_Y))

    def probes():
        return [
            cmd_holder_probe(w, metric, cfg, target)
            for w in HOLDER_SUITE_EXPONENTS
            for metric in SUPPORTED_METRIC_KINDS
            for target in SUPPORTED_PROBE_TARGETS
        ]

    return [
        _command_suite("table_reproduction", lambda: [cmd_table()]),
        _command_suite("figure_crossover", lambda: [cmd_figure(cfg)]),
        _command_suite("holder_divergence", probes),
        _command_suite("rotation_scan", lambda: [cmd_rotation_scan(default_x, default_y, cfg)]),
    ]


def cmd_verify(cfg: RunConfig, progress_bar: Optional[ProgressBar] = None) -> CommandResult:
    """
    Run every property suite and artifact suite with the configured seed.

    The report is deterministic for a given seed, sample count and
    tolerance apart from its generated_at field.
    """
    suites = PROPERTY_SUITES + artifact_suites(cfg)
    bar = progress_bar if progress_bar is not None else ProgressBar(enable_colors=ENABLE_COLORED_OUTPUT)
    bar.start_task("Property suites", len(suites))
    results = run_suites(
        suites,
        cfg.seed,
        cfg.samples,
        cfg.tolerance,
        on_suite_done=create_progress_callback(bar),
        on_suite_start=None if bar.enabled else log_suite_start,
    )
    bar.complete()

    report = build_report(results, cfg.seed, cfg.samples, cfg.tolerance)
    failures = [suite for suite in report["suites"] if not suite["passed"]]
    return CommandResult("verify", summary=report, failures=failures)
