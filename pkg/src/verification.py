"""Seeded property suites over every identity, bracket and monotonicity claim.

A suite is a named function of (generator, samples, tolerance) returning a
SuiteResult. run_suites hands each suite its own child generator of the run
seed, so a report depends only on the seed, the sample count and the
tolerance.
"""

import math
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from scipy import integrate

from src.bounds import (
    best_mu_lower,
    gamma_n_bounds,
    gamma_n_middle,
    grotzsch_mu_bracket,
    lambda_bounds,
    lambda_middle,
    mu_bounds_midpoint,
    mu_bounds_nd,
    mu_lower_linear,
    mu_lower_quartic,
    mu_middle_nd,
    pdec_expression,
    pdec_log_excess,
    rho_bounds_avv,
    rho_bounds_midpoint,
)
from src.config import (
    BRACKET_SLACK,
    CAPACITY_ARG_RANGE,
    CROSSOVER_RHO,
    PDEC_MIN_GAP,
    PDEC_P_RANGE,
    PDEC_T_RANGE,
    QC_VERIFY_PAIRS,
    TRIANGLE_SLACK,
)
from src.errors import ModMetricError
from src.geom import (
    UNIT_DISK,
    UPPER_HALF_PLANE,
    RotationParams,
    hyp_ball_to_euclidean,
    rho_ball,
    rho_halfspace,
    rotation_params,
    th_half_rho_rotated,
)
from src.metrics import (
    RingCondenser,
    lambda_metric,
    lambda_power_triangle_defect,
    mu_metric,
    qc_lambda_distortion,
    qc_mu_distortion,
    radial_stretch,
    ring_modulus,
)
from src.sampling import (
    sample_capacity_arg,
    sample_disk_point,
    sample_half_plane_point,
    sample_increasing,
    sample_pair,
    sample_pairs,
    sample_triples,
    sample_unit_interval,
    spawn_generators,
)
from src.specfun import (
    agm,
    constant_cn,
    ellip_k,
    gamma2,
    grotzsch_mu,
    surface_area_omega,
)

HALF_PI = 0.5 * math.pi

# Absolute agreement required of closed forms that are exact in theory
CLOSED_FORM_TOLERANCE = 1e-12

# Relative agreement between independently evaluated identities
CAPACITY_IDENTITY_TOLERANCE = 1e-10


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def relative_error(value: float, reference: float) -> float:
    """|value - reference| / |reference|, or the absolute error when reference is 0."""
    scale = abs(reference)
    return abs(value - reference) / scale if scale > 0.0 else abs(value)


@dataclass
class SuiteResult:
    """Outcome of one property suite."""
    name: str
    checked: int = 0
    failures: int = 0
    worst_slack: Optional[float] = None
    worst_error: Optional[float] = None
    sample: Optional[Any] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, sample: Any, slack: Optional[float] = None, error: Optional[float] = None) -> None:
        """Count one check; the first failing sample is kept."""
        self.checked += 1
        if slack is not None:
            self.worst_slack = slack if self.worst_slack is None else min(self.worst_slack, slack)
        if error is not None:
            self.worst_error = error if self.worst_error is None else max(self.worst_error, error)
        if not ok:
            self.failures += 1
            if self.sample is None:
                self.sample = _jsonable(sample)

    def close(self, value: float, reference: float, limit: float, sample: Any) -> None:
        """Record a relative-error check."""
        error = relative_error(value, reference)
        self.record(error <= limit, {**sample, "value": value, "reference": reference}, error=error)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "passed": self.passed,
            "worst_slack": self.worst_slack,
            "worst_error": self.worst_error,
            "sample": self.sample,
        }


SuiteFn = Callable[[np.random.Generator, int, float], SuiteResult]


@dataclass(frozen=True)
class Suite:
    name: str
    fn: SuiteFn


def _bracket(result: SuiteResult, bounds, value: float, sample: Dict[str, Any]) -> None:
    result.record(
        bounds.contains(value, BRACKET_SLACK),
        {**sample, "value": value, "lower": bounds.lower, "upper": bounds.upper},
        slack=bounds.margin(value),
    )


# ============================================================================
# SPECIAL FUNCTIONS
# ============================================================================

def suite_agm_mean(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("agm_mean")
    for _ in range(samples):
        a, b = rng.uniform(1e-6, 10.0, size=2).tolist()
        m = agm(a, b)
        sample = {"a": a, "b": b, "agm": m}
        result.record(min(a, b) * (1 - 1e-15) <= m <= max(a, b) * (1 + 1e-15), sample)
        result.record(agm(b, a) == m, sample)
        c = float(rng.uniform(0.1, 10.0))
        result.close(agm(c * a, c * b), c * m, 1e-13, {**sample, "scale": c})
    return result


def suite_ellip_k_quadrature(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("ellip_k_quadrature")
    for r in np.round(np.arange(0.1, 1.0, 0.1), 1).tolist():
        # x = sin(theta) removes the endpoint singularity of the defining integral
        reference, _ = integrate.quad(
            lambda t: 1.0 / math.sqrt(1.0 - (r * math.sin(t)) ** 2), 0.0, HALF_PI, epsabs=1e-14, epsrel=1e-13
        )
        result.close(ellip_k(r), reference, CAPACITY_IDENTITY_TOLERANCE, {"r": r})
    return result


def suite_functional_identity(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("functional_identity")
    low, high = CAPACITY_ARG_RANGE
    target = 0.5 * math.pi ** 2
    for _ in range(samples):
        s = sample_capacity_arg(rng, low, high)
        product = grotzsch_mu(1.0 / s) * grotzsch_mu((s - 1.0) / (s + 1.0))
        result.close(product, target, tolerance, {"s": s})
    result.close(grotzsch_mu(math.sqrt(2.0) - 1.0), math.pi / math.sqrt(2.0), CAPACITY_IDENTITY_TOLERANCE, {"r": "sqrt(2)-1"})
    return result


def suite_capacity_identity(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("capacity_identity")
    low, high = CAPACITY_ARG_RANGE
    for _ in range(samples):
        s = sample_capacity_arg(rng, low, high)
        result.close(gamma_n_middle(2, s), gamma2(s), CAPACITY_IDENTITY_TOLERANCE, {"s": s})
    return result


def suite_grotzsch_bracket(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("grotzsch_bracket")
    for _ in range(samples):
        r = sample_unit_interval(rng)
        _bracket(result, grotzsch_mu_bracket(r), grotzsch_mu(r), {"r": r})
    return result


def suite_grotzsch_monotone(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("grotzsch_monotone")
    for _ in range(samples):
        r1, r2 = sample_increasing(rng, 1e-9, 1.0 - 1e-9, 1e-6)
        result.record(grotzsch_mu(r1) > grotzsch_mu(r2), {"r1": r1, "r2": r2})
        s1, s2 = sample_increasing(rng, 1.001, 100.0, 1e-6)
        result.record(gamma2(s1) > gamma2(s2), {"s1": s1, "s2": s2})
    return result


def suite_capacity_bracket(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("capacity_bracket")
    low, high = CAPACITY_ARG_RANGE
    for _ in range(samples):
        s = sample_capacity_arg(rng, low, high)
        _bracket(result, gamma_n_bounds(2, s), gamma2(s), {"s": s})
    return result


def suite_dimension_constants(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("dimension_constants")
    result.close(constant_cn(2), 2.0 / math.pi, 0.0, {"n": 2})
    for n in range(3, 7):
        exponent = (2.0 - n) / (n - 1.0)
        # algebraic-weight rule: integrate (sin t / t)^a against t^a
        integral, _ = integrate.quad(
            lambda t: (math.sin(t) / t) ** exponent if t > 0.0 else 1.0,
            0.0, HALF_PI, weight="alg", wvar=(exponent, 0.0),
        )
        reference = 2.0 ** (1 - n) * surface_area_omega(n - 2) * integral ** (1 - n)
        result.close(constant_cn(n), reference, 1e-8, {"n": n})
        ring = RingCondenser(1.0, math.e, n)
        result.close(ring_modulus(ring), surface_area_omega(n - 1), 1e-14, {"n": n, "b/a": "e"})
    return result


# ============================================================================
# HYPERBOLIC GEOMETRY
# ============================================================================

def suite_rho_metric(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("rho_metric")
    for x, y, z in sample_triples(rng, samples):
        xy, yz, xz = rho_ball(x, y), rho_ball(y, z), rho_ball(x, z)
        sample = {"x": x, "y": y, "z": z}
        excess = xz - xy - yz
        result.record(excess <= TRIANGLE_SLACK * max(1.0, xz), sample, slack=-excess)
        result.record(rho_ball(y, x) == xy, sample)
    for _ in range(samples):
        t = float(rng.uniform(0.0, 0.999))
        result.close(rho_ball([0.0, 0.0], [t, 0.0]), 2.0 * math.atanh(t), CLOSED_FORM_TOLERANCE, {"t": t})
    return result


def suite_halfspace_invariance(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("halfspace_invariance")
    result.close(rho_halfspace([0.0, 1.0], [0.0, 2.0]), math.log(2.0), CLOSED_FORM_TOLERANCE, {"x": [0, 1], "y": [0, 2]})
    for _ in range(samples):
        x, y = sample_half_plane_point(rng), sample_half_plane_point(rng)
        shift = np.array([rng.uniform(-5.0, 5.0), 0.0])
        scale = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
        rho = rho_halfspace(x, y)
        sample = {"x": x, "y": y, "shift": shift[0], "scale": scale}
        result.close(rho_halfspace(x + shift, y + shift), rho, tolerance, sample)
        result.close(rho_halfspace(scale * x, scale * y), rho, tolerance, sample)
        result.record(rho_halfspace(y, x) == rho, sample)
    return result


def suite_hyperbolic_ball(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("hyperbolic_ball")
    for _ in range(samples):
        x = sample_disk_point(rng, 0.9)
        M = float(rng.uniform(0.01, 3.0))
        center, radius = hyp_ball_to_euclidean(x, M)
        norm = float(np.linalg.norm(x))
        direction = x / norm if norm > 0.0 else np.array([1.0, 0.0])
        sample = {"x": x, "M": M}
        result.record(float(np.linalg.norm(center)) + radius < 1.0, sample)
        for z in (center + radius * direction, center - radius * direction):
            error = abs(rho_ball(x, z) - M)
            result.record(error <= 1e-10, {**sample, "z": z}, error=error)
    return result


def suite_rotation_monotone(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("rotation_monotone")
    checked = 0
    while checked < samples:
        d, k = rng.uniform(0.01, 0.99, size=2).tolist()
        if d + k >= 1.0:
            continue
        nu1, nu2 = sample_increasing(rng, 0.0, HALF_PI, 1e-3)
        params = RotationParams(d, k, 0.0)
        first, second = th_half_rho_rotated(params.at(nu1)), th_half_rho_rotated(params.at(nu2))
        result.record(first > second, {"d": d, "k": k, "nu1": nu1, "nu2": nu2}, slack=first - second)
        checked += 1
    return result


def suite_rotation_endpoints(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("rotation_endpoints")
    for x, y in sample_pairs(rng, samples):
        params = rotation_params(x, y)
        chord, total = float(np.linalg.norm(x - y)), float(np.linalg.norm(x + y))
        one_minus_dot = 1.0 - float(np.dot(x, y))
        collinear = chord / one_minus_dot
        equal_norms = 2.0 * chord / math.sqrt(4.0 * one_minus_dot ** 2 + chord ** 2 * total ** 2)
        th, _ = UNIT_DISK.th_sech_half_rho(x, y)
        sample = {"x": x, "y": y, "nu": params.nu}
        for value, reference in (
            (th_half_rho_rotated(params.at(0.0)), collinear),
            (th_half_rho_rotated(params.at(HALF_PI)), equal_norms),
            (th_half_rho_rotated(params), th),
        ):
            error = abs(value - reference)
            result.record(error <= CLOSED_FORM_TOLERANCE * max(1.0, abs(reference)), sample, error=error)
    return result


# ============================================================================
# MODULUS AND FERRAND METRICS
# ============================================================================

def suite_modulus_sandwich(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("modulus_sandwich")
    for x, y in sample_pairs(rng, samples):
        rho, mu = UNIT_DISK.rho(x, y), mu_metric(UNIT_DISK, x, y)
        sample = {"x": x, "y": y, "rho": rho}
        _bracket(result, mu_bounds_nd(2, rho), mu, sample)
        result.close(mu_middle_nd(2, rho), mu, tolerance, sample)
    return result


def suite_ferrand_sandwich(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("ferrand_sandwich")
    for x, y in sample_pairs(rng, samples):
        rho, lam = UNIT_DISK.rho(x, y), lambda_metric(UNIT_DISK, x, y)
        sample = {"x": x, "y": y, "rho": rho}
        _bracket(result, lambda_bounds(2, rho), lam, sample)
        result.close(lambda_middle(2, rho), lam, tolerance, sample)
    return result


def suite_product_identity(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("product_identity")
    for x, y in sample_pairs(rng, samples):
        product = mu_metric(UNIT_DISK, x, y) * lambda_metric(UNIT_DISK, x, y)
        result.close(product, 4.0, tolerance, {"x": x, "y": y, "domain": "unit-disk"})
    for _ in range(samples):
        x, y = sample_half_plane_point(rng), sample_half_plane_point(rng)
        product = mu_metric(UPPER_HALF_PLANE, x, y) * lambda_metric(UPPER_HALF_PLANE, x, y)
        result.close(product, 4.0, tolerance, {"x": x, "y": y, "domain": "half-plane"})
    return result


def suite_modulus_metric(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("modulus_metric")
    for x, y, z in sample_triples(rng, samples):
        xy, yz, xz = mu_metric(UNIT_DISK, x, y), mu_metric(UNIT_DISK, y, z), mu_metric(UNIT_DISK, x, z)
        sample = {"x": x, "y": y, "z": z}
        excess = xz - xy - yz
        result.record(excess <= TRIANGLE_SLACK * max(1.0, xz), sample, slack=-excess)
        result.record(mu_metric(UNIT_DISK, y, x) == xy, sample)
    return result


def suite_modulus_monotone_in_rho(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("modulus_monotone_in_rho")
    for _ in range(samples):
        pairs = [sample_pair(rng), sample_pair(rng)]
        (rho1, mu1), (rho2, mu2) = sorted((UNIT_DISK.rho(x, y), mu_metric(UNIT_DISK, x, y)) for x, y in pairs)
        if rho2 - rho1 <= 1e-12 * max(1.0, rho2):
            continue
        result.record(mu1 < mu2, {"rho": [rho1, rho2], "mu": [mu1, mu2]})
    return result


def suite_ferrand_inverse_triangle(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("ferrand_inverse_triangle")
    for x, y, z in sample_triples(rng, samples):
        defect = lambda_power_triangle_defect(UNIT_DISK, x, y, z, -1.0)
        result.record(defect <= TRIANGLE_SLACK, {"x": x, "y": y, "z": z}, slack=-defect)
    return result


def suite_radial_stretch(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("radial_stretch_distortion")
    pairs = sample_pairs(rng, min(samples, QC_VERIFY_PAIRS))
    for report in (qc_mu_distortion(0.5, pairs), qc_lambda_distortion(0.5, pairs)):
        result.record(report.passed, {"metric": report.metric, "worst_pair": report.worst_pair})
    identity = qc_mu_distortion(1.0, pairs)
    result.record(identity.min_ratio == 1.0 == identity.max_ratio, {"alpha": 1.0, "range": [identity.min_ratio, identity.max_ratio]})
    x = float(rng.uniform(0.0, 0.999))
    result.close(float(np.linalg.norm(radial_stretch([x, 0.0], 0.5))), math.sqrt(x), 1e-15, {"x": x, "alpha": 0.5})
    return result


# ============================================================================
# BRACKETS
# ============================================================================

def suite_midpoint_bracket(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("midpoint_bracket")
    for x, y in sample_pairs(rng, samples):
        th, _ = UNIT_DISK.th_sech_half_rho(x, y)
        _bracket(result, rho_bounds_midpoint(x, y), th, {"x": x, "y": y})

    checked = 0
    while checked < samples:
        x = sample_disk_point(rng, 0.9)
        angle = float(rng.uniform(0.01, 2.0 * math.pi - 0.01))
        c, s = math.cos(angle), math.sin(angle)
        equal_norm = np.array([c * x[0] - s * x[1], s * x[0] + c * x[1]])
        direction = x / np.linalg.norm(x)
        collinear = float(rng.uniform(-0.9, 0.9)) * direction
        for y, side in ((equal_norm, "lower"), (collinear, "upper")):
            if np.linalg.norm(x - y) < 1e-3 or np.linalg.norm(x + y) < 1e-3:
                continue
            th, _ = UNIT_DISK.th_sech_half_rho(x, y)
            bound = getattr(rho_bounds_midpoint(x, y), side)
            error = abs(bound - th)
            result.record(error <= CLOSED_FORM_TOLERANCE, {"x": x, "y": y, "equality": side}, error=error)
        checked += 1
    return result


def suite_avv_bracket(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("avv_bracket")
    for x, y in sample_pairs(rng, samples):
        th, _ = UNIT_DISK.th_sech_half_rho(x, y)
        _bracket(result, rho_bounds_avv(x, y), th, {"x": x, "y": y})
    # y = -x is admissible here and attains both ends
    for _ in range(samples):
        x = sample_disk_point(rng)
        if np.linalg.norm(x) < 1e-3:
            continue
        th, _ = UNIT_DISK.th_sech_half_rho(x, -x)
        _bracket(result, rho_bounds_avv(x, -x), th, {"x": x, "y": -x})
    return result


def suite_midpoint_modulus_bracket(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("midpoint_modulus_bracket")
    for x, y in sample_pairs(rng, samples):
        _bracket(result, mu_bounds_midpoint(x, y), mu_metric(UNIT_DISK, x, y), {"x": x, "y": y})
    return result


def suite_quartic_lower_bound(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("quartic_lower_bound")
    for x, y in sample_pairs(rng, samples):
        rho, mu = UNIT_DISK.rho(x, y), mu_metric(UNIT_DISK, x, y)
        lower = best_mu_lower(rho)
        result.record(mu_lower_quartic(rho) < mu and lower < mu, {"x": x, "y": y, "rho": rho}, slack=mu - lower)
    return result


def suite_lower_bound_crossover(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("lower_bound_crossover")
    crossing = 8.0 / math.pi
    for bound in (mu_lower_quartic, mu_lower_linear, best_mu_lower):
        error = abs(bound(CROSSOVER_RHO) - crossing)
        result.record(error <= CLOSED_FORM_TOLERANCE, {"bound": bound.__name__}, error=error)
    for _ in range(samples):
        rho = float(rng.uniform(0.0, 10.0))
        if abs(rho - CROSSOVER_RHO) < 1e-9:
            continue
        quartic, linear = mu_lower_quartic(rho), mu_lower_linear(rho)
        result.record((quartic > linear) == (rho < CROSSOVER_RHO), {"rho": rho, "quartic": quartic, "linear": linear})
    return result


def suite_pdec_monotone(rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    result = SuiteResult("pdec_monotone")
    for _ in range(samples):
        t = float(rng.uniform(*PDEC_T_RANGE))
        p1, p2 = sample_increasing(rng, *PDEC_P_RANGE, PDEC_MIN_GAP)
        first, second = pdec_log_excess(t, p1), pdec_log_excess(t, p2)
        result.record(first < second, {"t": t, "p1": p1, "p2": p2}, slack=second - first)
        result.close(pdec_expression(t, 1.0), t, CLOSED_FORM_TOLERANCE, {"t": t, "p": 1.0})
    return result


PROPERTY_SUITES: List[Suite] = [
    Suite("agm_mean", suite_agm_mean),
    Suite("ellip_k_quadrature", suite_ellip_k_quadrature),
    Suite("functional_identity", suite_functional_identity),
    Suite("capacity_identity", suite_capacity_identity),
    Suite("grotzsch_bracket", suite_grotzsch_bracket),
    Suite("grotzsch_monotone", suite_grotzsch_monotone),
    Suite("capacity_bracket", suite_capacity_bracket),
    Suite("dimension_constants", suite_dimension_constants),
    Suite("rho_metric", suite_rho_metric),
    Suite("halfspace_invariance", suite_halfspace_invariance),
    Suite("hyperbolic_ball", suite_hyperbolic_ball),
    Suite("rotation_monotone", suite_rotation_monotone),
    Suite("rotation_endpoints", suite_rotation_endpoints),
    Suite("modulus_sandwich", suite_modulus_sandwich),
    Suite("ferrand_sandwich", suite_ferrand_sandwich),
    Suite("product_identity", suite_product_identity),
    Suite("modulus_metric", suite_modulus_metric),
    Suite("modulus_monotone_in_rho", suite_modulus_monotone_in_rho),
    Suite("ferrand_inverse_triangle", suite_ferrand_inverse_triangle),
    Suite("radial_stretch_distortion", suite_radial_stretch),
    Suite("midpoint_bracket", suite_midpoint_bracket),
    Suite("avv_bracket", suite_avv_bracket),
    Suite("midpoint_modulus_bracket", suite_midpoint_modulus_bracket),
    Suite("quartic_lower_bound", suite_quartic_lower_bound),
    Suite("lower_bound_crossover", suite_lower_bound_crossover),
    Suite("pdec_monotone", suite_pdec_monotone),
]


def run_suite(suite: Suite, rng: np.random.Generator, samples: int, tolerance: float) -> SuiteResult:
    """Run one suite; an exception inside it counts as a failed check."""
    try:
        return suite.fn(rng, samples, tolerance)
    except (ModMetricError, ArithmeticError) as e:
        result = SuiteResult(suite.name)
        result.record(False, {"error": f"{type(e).__name__}: {e}"})
        return result


def run_suites(
    suites: Sequence[Suite],
    seed: int,
    samples: int,
    tolerance: float,
    on_suite_done: Optional[Callable[[int], None]] = None,
    on_suite_start: Optional[Callable[[str], None]] = None,
) -> List[SuiteResult]:
    """
    Run suites in order, each on its own child generator of seed.

    Args:
        suites: Suites to run
        seed: Run seed (unsigned 64-bit)
        samples: Samples per suite
        tolerance: Relative tolerance of identity checks
        on_suite_done: Called with the number of finished suites
        on_suite_start: Called with the name of the suite about to run
    """
    results = []
    for index, (suite, rng) in enumerate(zip(suites, spawn_generators(seed, len(suites))), start=1):
        if on_suite_start:
            on_suite_start(suite.name)
        results.append(run_suite(suite, rng, samples, tolerance))
        if on_suite_done:
            on_suite_done(index)
    return results


def build_report(results: Sequence[SuiteResult], seed: int, samples: int, tolerance: float) -> Dict[str, Any]:
    """JSON-ready report; identical inputs give identical reports apart from generated_at."""
    return {
        "seed": seed,
        "samples": samples,
        "tolerance": tolerance,
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "all_passed": all(result.passed for result in results),
        "passed": sum(result.passed for result in results),
        "total": len(results),
        "suites": [result.to_dict() for result in results],
    }
