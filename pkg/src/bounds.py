"""Closed-form two-sided estimates of the special functions and metrics.

Every estimate is returned as a BoundPair tagged with the inequality that
produced it. Middle members that coincide with the exact quantity for
n = 2 are exposed by the *_middle functions.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from src.config import BRACKET_SLACK, GROTZSCH_ASYMPTOTIC_THRESHOLD, PDEC_UNDERFLOW_T
from src.errors import DomainError, ModMetricError, ZeroChordError
from src.geom import UNIT_DISK, PointLike, as_planar_point, rotation_params
from src.metrics import mu_from_th
from src.specfun import (
    Dimension,
    UnitInterval,
    as_capacity_arg,
    as_dimension,
    as_unit_interval,
    constant_cn,
    grotzsch_mu_pair,
)

LOG_4 = math.log(4.0)


class BoundSource(Enum):
    """The inequality a bracket comes from."""
    GROTZSCH_ARTH = "grotzsch-arth"
    CAPACITY_LOG = "capacity-log"
    MODULUS_HYPERBOLIC = "modulus-hyperbolic"
    FERRAND_HYPERBOLIC = "ferrand-hyperbolic"
    MIDPOINT_ROTATION = "midpoint-rotation"
    MIDPOINT_MODULUS = "midpoint-modulus"
    AVV_COMPARISON = "avv-comparison"


@dataclass(frozen=True)
class BoundPair:
    """
    A lower bound and an optional upper bound for one exact quantity.

    An absent upper bound means the inequality gives no upper estimate for
    this input; it is not a placeholder for infinity.
    """
    lower: float
    upper: Optional[float]
    source: BoundSource

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper + BRACKET_SLACK * max(1.0, abs(self.upper)):
            raise ModMetricError(
                f"Inverted {self.source.value} bracket: lower = {self.lower}, upper = {self.upper}"
            )

    @property
    def has_upper(self) -> bool:
        return self.upper is not None

    @property
    def width(self) -> Optional[float]:
        return None if self.upper is None else self.upper - self.lower

    def margin(self, value: float) -> float:
        """Distance from value to the nearest bound; negative when outside."""
        below = value - self.lower
        return below if self.upper is None else min(below, self.upper - value)

    def contains(self, value: float, slack: float = BRACKET_SLACK) -> bool:
        """Whether lower <= value <= upper, each side relaxed by slack * max(1, |value|)."""
        tolerance = slack * max(1.0, abs(value))
        if value < self.lower - tolerance:
            return False
        return self.upper is None or value <= self.upper + tolerance


def _arth_from_gap(y: float, one_minus_y: float) -> float:
    # arth(y) with 1 - y supplied to full precision
    if one_minus_y <= 0.0:
        raise DomainError(f"arth needs y < 1, got 1 - y = {one_minus_y}")
    return 0.5 * math.log1p(2.0 * y / one_minus_y)


def _factor(n: Union[int, Dimension]) -> float:
    dim = Dimension(as_dimension(n))
    return 2.0 ** (dim.n - 1) * dim.c


def _nonnegative(rho: float) -> float:
    if not rho >= 0.0 or math.isinf(rho):
        raise DomainError(f"Hyperbolic distance must be finite and nonnegative, got {rho}")
    return float(rho)


# ============================================================================
# SPECIAL FUNCTION BRACKETS
# ============================================================================

def grotzsch_mu_bracket(r: Union[float, UnitInterval]) -> BoundPair:
    """
    arth(r'^(1/4)) < mu(r) < pi^2 / (4 arth(r^(1/4))).

    Both fourth roots are formed through logarithms so 1 - y keeps full
    precision at either end of (0, 1).
    """
    r = as_unit_interval(r)
    log_r = math.log(r)
    # r'^(1/4) = (1 - r^2)^(1/8)
    log_low = 0.125 * math.log1p(-r * r)
    lower = _arth_from_gap(math.exp(log_low), -math.expm1(log_low))
    upper_arth = _arth_from_gap(math.exp(0.25 * log_r), -math.expm1(0.25 * log_r))
    return BoundPair(lower, math.pi ** 2 / (4.0 * upper_arth), BoundSource.GROTZSCH_ARTH)


def gamma_n_bounds(n: Union[int, Dimension], s: float) -> BoundPair:
    """
    2^(n-1) c_n log((s+1)/(s-1)) <= gamma_n(s) < 2^(n-1) c_n log(4 (s+1)/(s-1)).

    Example:
        >>> b = gamma_n_bounds(2, 2.0)
        >>> round(b.upper - b.lower - 4 / math.pi * math.log(4), 12)
        0.0
    """
    s = as_capacity_arg(s)
    factor = _factor(n)
    lower = factor * math.log1p(2.0 / (s - 1.0))
    return BoundPair(lower, lower + factor * LOG_4, BoundSource.CAPACITY_LOG)


def gamma_n_middle(n: Union[int, Dimension], s: float) -> float:
    """2^(n-1) c_n mu((s-1)/(s+1)); equal to gamma_2(s) when n = 2."""
    s = as_capacity_arg(s)
    return _factor(n) * grotzsch_mu_pair((s - 1.0) / (s + 1.0), 2.0 * math.sqrt(s) / (s + 1.0))


# ============================================================================
# MODULUS AND FERRAND METRICS IN TERMS OF rho
# ============================================================================

def mu_bounds_nd(n: Union[int, Dimension], rho: float) -> BoundPair:
    """
    2^(n-1) c_n rho <= mu_D(x, y) < 2^(n-1) c_n (rho + log 4) for D in {B^n, H^n}.

    Example:
        >>> b = mu_bounds_nd(2, 0.0)
        >>> b.lower, round(b.upper, 12) == round(4 / math.pi * math.log(4), 12)
        (0.0, True)
    """
    rho = _nonnegative(rho)
    factor = _factor(n)
    return BoundPair(factor * rho, factor * (rho + LOG_4), BoundSource.MODULUS_HYPERBOLIC)


def mu_middle_nd(n: Union[int, Dimension], rho: float) -> float:
    """2^(n-1) c_n mu(e^(-rho)); equal to mu_D(x, y) when n = 2."""
    rho = _nonnegative(rho)
    factor = _factor(n)
    if rho == 0.0:
        return 0.0
    if rho >= -math.log(GROTZSCH_ASYMPTOTIC_THRESHOLD):
        return factor * (rho + LOG_4)
    return factor * grotzsch_mu_pair(math.exp(-rho), math.sqrt(-math.expm1(-2.0 * rho)))


def _quarter_th(rho: float) -> float:
    if not rho > 0.0 or math.isinf(rho):
        raise DomainError(f"Ferrand bounds need finite rho > 0, got {rho}")
    return math.tanh(0.25 * rho)


def lambda_bounds(n: Union[int, Dimension], rho: float) -> BoundPair:
    """
    c_n log t <= lambda_D(x, y) < c_n log(2t), t = (e^(rho/2) + 1) / (e^(rho/2) - 1).

    Raises:
        DomainError: If rho <= 0
    """
    _quarter_th(rho)
    c = constant_cn(as_dimension(n))
    # log t = log(1 + 2 / (e^(rho/2) - 1))
    log_t = math.log1p(2.0 / math.expm1(0.5 * rho))
    return BoundPair(c * log_t, c * (log_t + math.log(2.0)), BoundSource.FERRAND_HYPERBOLIC)


def lambda_middle(n: Union[int, Dimension], rho: float) -> float:
    """(c_n / 2) mu(t^-2); equal to lambda_D(x, y) when n = 2."""
    th = _quarter_th(rho)
    c = constant_cn(as_dimension(n))
    # 1/t = th(rho/4); complement of th^2 is sech(rho/4) sqrt(1 + th^2)
    complement = math.sqrt(1.0 + th * th) / math.cosh(0.25 * rho)
    return 0.5 * c * grotzsch_mu_pair(th * th, complement)


def mu_lower_quartic(rho: float) -> float:
    """
    mu_D(x, y) >= 8 / (pi 2^(1/4)) rho^(1/4).

    Example:
        >>> round(mu_lower_quartic(2.0) - mu_lower_linear(2.0), 12)
        0.0
    """
    return 8.0 / (math.pi * 2.0 ** 0.25) * _nonnegative(rho) ** 0.25


def mu_lower_linear(rho: float) -> float:
    """mu_D(x, y) >= (4/pi) rho."""
    return 4.0 / math.pi * _nonnegative(rho)


def best_mu_lower(rho: float) -> float:
    """The larger of the quartic and linear lower bounds; they cross at rho = 2."""
    return max(mu_lower_quartic(rho), mu_lower_linear(rho))


# ============================================================================
# MIDPOINT ROTATION AND COMPARISON BRACKETS (unit disk)
# ============================================================================

def _disk_pair(x: PointLike, y: PointLike) -> Tuple[np.ndarray, np.ndarray]:
    x, y = UNIT_DISK.require(as_planar_point(x)), UNIT_DISK.require(as_planar_point(y))
    if not np.any(x - y):
        raise ZeroChordError(f"The points coincide: {x}")
    return x, y


def _planar_pair(x: PointLike, y: PointLike) -> Tuple[np.ndarray, np.ndarray]:
    x, y = _disk_pair(x, y)
    # rejects x = -y
    rotation_params(x, y)
    return x, y


def rho_bounds_midpoint(x: PointLike, y: PointLike) -> BoundPair:
    """
    Bracket on th(rho_B2(x, y)/2) from rotating the pair about its midpoint.

        2|x-y| / sqrt(4 - 8 x.y + (|x|^2 + |y|^2)^2) <= th(rho/2) <= |x-y| / (1 - x.y)

    The lower bound is attained iff |x| = |y| and the upper iff x, y are
    collinear with 0. The upper bound is reported only when
    |x + y| + |x - y| < 2.

    Raises:
        DegenerateMidpointError: If x = -y
        ZeroChordError: If x = y
    """
    x, y = _planar_pair(x, y)
    chord = float(np.linalg.norm(x - y))
    total = float(np.linalg.norm(x + y))
    # 1 - x.y = 1 - k^2 + d^2, and the lower radicand is 4(1 - x.y)^2 + |x-y|^2 |x+y|^2
    half_total = 0.5 * total
    one_minus_dot = (1.0 - half_total) * (1.0 + half_total) + 0.25 * chord * chord
    lower = chord / math.hypot(one_minus_dot, 0.5 * chord * total)
    upper = chord / one_minus_dot if total + chord < 2.0 else None
    return BoundPair(lower, upper, BoundSource.MIDPOINT_ROTATION)


def rho_bounds_avv(x: PointLike, y: PointLike) -> BoundPair:
    """
    Comparison bracket on th(rho_B2(x, y)/2):

        |x-y| / min(|x-y| + sqrt(1-|x|^2) sqrt(1-|y|^2), 1 + |x||y|)
            <= th(rho/2) <=
        |x-y| / max(|x-y| + (1-|x|)(1-|y|), 1 - |x||y|)

    Unlike the midpoint bracket this one accepts x = -y.

    Raises:
        DomainError: If a point lies outside the unit disk
        ZeroChordError: If x = y
    """
    x, y = _disk_pair(x, y)
    chord = float(np.linalg.norm(x - y))
    nx, ny = float(np.linalg.norm(x)), float(np.linalg.norm(y))
    root = math.sqrt((1.0 - nx) * (1.0 + nx)) * math.sqrt((1.0 - ny) * (1.0 + ny))
    lower = chord / min(chord + root, 1.0 + nx * ny)
    upper = chord / max(chord + (1.0 - nx) * (1.0 - ny), 1.0 - nx * ny)
    return BoundPair(lower, upper, BoundSource.AVV_COMPARISON)


def mu_bounds_midpoint(x: PointLike, y: PointLike) -> BoundPair:
    """
    Bracket on mu_B2(x, y): gamma_2 applied to the reciprocals of the
    midpoint-rotation bracket. Without an upper th bound there is no
    upper mu bound.
    """
    th = rho_bounds_midpoint(x, y)
    upper = mu_from_th(th.upper) if th.upper is not None and th.upper < 1.0 else None
    return BoundPair(mu_from_th(th.lower), upper, BoundSource.MIDPOINT_MODULUS)


# ============================================================================
# MONOTONE ARTH EXPRESSION
# ============================================================================

def _pdec_arth(t: float, p: float) -> Tuple[float, float]:
    # y = (th t)^(1/p) and arth(y)
    if not (t > 0.0 and p > 0.0) or math.isinf(t) or math.isinf(p):
        raise DomainError(f"Expected finite t > 0 and p > 0, got t = {t}, p = {p}")
    if t < PDEC_UNDERFLOW_T:
        e = math.exp(-2.0 * t)
        # log(th t) = log(1 - 2e/(1 + e))
        log_th = math.log1p(-2.0 * e / (1.0 + e))
        y, one_minus_y = math.exp(log_th / p), -math.expm1(log_th / p)
        if one_minus_y > 0.0:
            return y, _arth_from_gap(y, one_minus_y)
        log_neg_log_th = math.log(-log_th)
    else:
        # -log(th t) ~ 2 e^(-2t)
        log_neg_log_th = math.log(2.0) - 2.0 * t
    # 1 - y ~ -log(th t) / p and arth(y) ~ log(2 / (1 - y)) / 2
    return 1.0, 0.5 * (math.log(2.0) - log_neg_log_th + math.log(p))


def pdec_expression(t: float, p: float) -> float:
    """
    [arth((th t)^(1/p))]^p; strictly increasing in p, equal to t at p = 1.

    For t where (th t)^(1/p) rounds to 1 the leading asymptotic
    arth(y) ~ t + log(p)/2 is used.

    Example:
        >>> abs(pdec_expression(0.7, 1.0) - 0.7) < 1e-12
        True
    """
    _, arth = _pdec_arth(t, p)
    return arth ** p


def _arth_ratio_excess(y: float, arth: float) -> float:
    # arth(y)/y - 1 = sum_{k>=1} y^(2k) / (2k + 1)
    if y >= 1e-2:
        return arth / y - 1.0
    y_sq = y * y
    term, total, k = y_sq, 0.0, 1
    while term > 1e-17 * total:
        total += term / (2 * k + 1)
        term *= y_sq
        k += 1
    return total


def pdec_log_excess(t: float, p: float) -> float:
    """
    log(pdec_expression(t, p)) - log(th t), free of cancellation.

    Equal to p log(arth(y)/y) with y = (th t)^(1/p). Since log(th t) does
    not depend on p, this has the same monotonicity in p as pdec_expression
    while staying resolvable where the expression itself is flat.
    """
    y, arth = _pdec_arth(t, p)
    return p * math.log1p(_arth_ratio_excess(y, arth))
