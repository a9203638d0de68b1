"""Exact modulus and Ferrand metrics of the unit disk and the upper half-plane.

For D in {B^2, H^2} both metrics are functions of the hyperbolic distance:

    mu_D(x, y)     = gamma_2(1 / th(rho/2)) = 2 pi / mu(th(rho/2))
    lambda_D(x, y) = gamma_2(ch(rho/2)) / 4  = pi / (2 mu(sech(rho/2)))

th(rho/2) and sech(rho/2) form a complementary pair, so mu * lambda = 4.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.errors import (
    ArgumentError,
    DegeneratePairError,
    DomainError,
    UnsupportedDimensionError,
    ZeroChordError,
)
from src.geom import UNIT_DISK, DomainSpec, PointLike, as_point
from src.specfun import Dimension, grotzsch_mu_pair

Pair = Tuple[PointLike, PointLike]


# ============================================================================
# DOMAIN TYPES
# ============================================================================

@dataclass(frozen=True)
class RingCondenser:
    """The annular ring condenser between the spheres |x| = a and |x| = b."""
    a: float
    b: float
    n: int = 2

    def __post_init__(self):
        Dimension(self.n)
        if not (0.0 < self.a < self.b) or math.isinf(self.b):
            raise DomainError(f"Ring needs 0 < a < b < inf, got a = {self.a}, b = {self.b}")


@dataclass(frozen=True)
class StretchParam:
    """Exponent alpha of the radial stretch x -> |x|^(alpha - 1) x."""
    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"Stretch exponent must lie in (0, 1], got alpha = {self.alpha}")

    @property
    def K(self) -> float:
        """Maximal dilatation of the planar radial stretch."""
        return 1.0 / self.alpha


def _stretch_param(p: Union[float, StretchParam]) -> StretchParam:
    return p if isinstance(p, StretchParam) else StretchParam(float(p))


def _planar(domain: DomainSpec) -> DomainSpec:
    if domain.n != 2:
        raise UnsupportedDimensionError(
            f"Exact metrics exist only for n = 2, got n = {domain.n}; use the bounds module"
        )
    return domain


# ============================================================================
# EXACT METRICS
# ============================================================================

def mu_from_th(th: float, sech: Optional[float] = None) -> float:
    """
    The modulus metric as a function of th(rho/2): gamma_2(1/th) = 2 pi / mu(th).

    Args:
        th: th(rho/2), 0 <= th <= 1; th may round to 1 when sech is supplied
        sech: sech(rho/2) if known to full precision; otherwise sqrt(1 - th^2)

    Example:
        >>> abs(mu_from_th(2 ** 0.5 - 1) - 2 * 2 ** 0.5) < 1e-12
        True
    """
    if not 0.0 <= th <= 1.0 or (th == 1.0 and not (sech is not None and sech > 0.0)):
        raise DomainError(f"th(rho/2) must lie in [0, 1), got {th}")
    if th == 0.0:
        return 0.0
    if sech is None:
        sech = math.sqrt((1.0 - th) * (1.0 + th))
    return 2.0 * math.pi / grotzsch_mu_pair(th, sech)


def mu_metric(domain: DomainSpec, x: PointLike, y: PointLike) -> float:
    """
    Modulus metric mu_D(x, y) of the unit disk or the upper half-plane.

    Raises:
        DomainError: If a point lies outside the domain
        UnsupportedDimensionError: If the domain is not two-dimensional

    Example:
        >>> round(mu_metric(UNIT_DISK, [0.5, 0.0], [0.0, 0.0]), 6)
        3.126804
    """
    th, sech = _planar(domain).th_sech_half_rho(x, y)
    return mu_from_th(th, sech)


def lambda_metric(domain: DomainSpec, x: PointLike, y: PointLike) -> float:
    """
    Ferrand metric lambda_D(x, y) of the unit disk or the upper half-plane.

    Raises:
        DegeneratePairError: If x = y (the metric diverges)
        DomainError: If a point lies outside the domain
        UnsupportedDimensionError: If the domain is not two-dimensional

    Example:
        >>> round(lambda_metric(UNIT_DISK, [0.5, 0.0], [0.0, 0.0]), 6)
        1.279262
    """
    th, sech = _planar(domain).th_sech_half_rho(x, y)
    if th == 0.0:
        raise DegeneratePairError(f"lambda_D(x, x) diverges at x = {as_point(x)}")
    return 0.5 * math.pi / grotzsch_mu_pair(sech, th)


def lambda_power_triangle_defect(
    domain: DomainSpec, x: PointLike, y: PointLike, z: PointLike, p: float = -1.0
) -> float:
    """
    Triangle defect d(x, z) - d(x, y) - d(y, z) of d = lambda_D^p.

    Coincident points contribute 0 for p < 0 (lambda diverges).
    A defect <= 0 means the triangle inequality holds for this triple.
    """
    def distance(a: PointLike, b: PointLike) -> float:
        if np.array_equal(as_point(a), as_point(b)):
            if p < 0.0:
                return 0.0
            raise DegeneratePairError("lambda_D^p with p >= 0 is undefined at coincident points")
        return lambda_metric(domain, a, b) ** p

    return distance(x, z) - distance(x, y) - distance(y, z)


# ============================================================================
# RING MODULUS
# ============================================================================

def ring_modulus(c: RingCondenser) -> float:
    """
    Modulus of the curves joining the two boundary spheres of a ring.

    omega_(n-1) (log(b/a))^(1-n)

    Example:
        >>> ring_modulus(RingCondenser(1.0, math.e)) == 2 * math.pi
        True
    """
    return Dimension(c.n).omega * math.log(c.b / c.a) ** (1 - c.n)


def capacity_ring(c: RingCondenser) -> float:
    """Capacity cap(G, F) of the ring condenser; equal to its modulus."""
    return ring_modulus(c)


# ============================================================================
# RADIAL STRETCH AND QUASICONFORMAL DISTORTION
# ============================================================================

def radial_stretch(x: PointLike, p: Union[float, StretchParam]) -> np.ndarray:
    """
    The radial stretch g(x) = |x|^(alpha - 1) x of the unit ball; g(0) = 0.

    Example:
        >>> radial_stretch([0.25, 0.0], 0.5)
        array([0.5, 0. ])
    """
    p = _stretch_param(p)
    x = as_point(x)
    norm = float(np.linalg.norm(x))
    if norm >= 1.0:
        raise DomainError(f"Radial stretch needs |x| < 1, got |x| = {norm}")
    if norm == 0.0:
        return np.zeros_like(x)
    return norm ** (p.alpha - 1.0) * x


@dataclass
class DistortionReport:
    """Observed distortion of a metric under a K-quasiconformal map."""
    metric: str
    K: float
    checked: int
    min_ratio: float
    max_ratio: float
    violations: int = 0
    worst_pair: Optional[List[List[float]]] = None
    ratios: List[float] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "metric": self.metric,
            "K": self.K,
            "allowed_range": [1.0 / self.K, self.K],
            "checked": self.checked,
            "min_ratio": self.min_ratio,
            "max_ratio": self.max_ratio,
            "violations": self.violations,
            "worst_pair": self.worst_pair,
            "passed": self.passed,
        }


def _distortion(metric, name: str, p: StretchParam, pairs: Sequence[Pair], slack: float) -> DistortionReport:
    if not pairs:
        raise ArgumentError("Distortion check needs at least one pair")
    low, high = 1.0 / p.K, p.K
    ratios = []
    violations = 0
    worst_pair, worst_excess = None, -math.inf

    for x, y in pairs:
        x, y = as_point(x), as_point(y)
        if np.array_equal(x, y):
            raise ZeroChordError(f"Distortion pairs must be distinct, got x = y = {x}")
        ratio = metric(UNIT_DISK, radial_stretch(x, p), radial_stretch(y, p)) / metric(UNIT_DISK, x, y)
        ratios.append(ratio)
        excess = max(low - ratio, ratio - high)
        if excess > slack:
            violations += 1
        if excess > worst_excess:
            worst_excess, worst_pair = excess, [x.tolist(), y.tolist()]

    return DistortionReport(
        metric=name,
        K=p.K,
        checked=len(ratios),
        min_ratio=min(ratios),
        max_ratio=max(ratios),
        violations=violations,
        worst_pair=worst_pair,
        ratios=ratios,
    )


def qc_mu_distortion(
    p: Union[float, StretchParam], pairs: Sequence[Pair], slack: float = 1e-12
) -> DistortionReport:
    """
    Ratios mu(g(x), g(y)) / mu(x, y) for the radial stretch g.

    Every ratio must lie in [1/K, K] with K = 1/alpha.

    Raises:
        ArgumentError: If pairs is empty
        ZeroChordError: If a pair has x = y
    """
    return _distortion(mu_metric, "modulus", _stretch_param(p), pairs, slack)


def qc_lambda_distortion(
    p: Union[float, StretchParam], pairs: Sequence[Pair], slack: float = 1e-12
) -> DistortionReport:
    """Ratios lambda(g(x), g(y)) / lambda(x, y) for the radial stretch g."""
    return _distortion(lambda_metric, "ferrand", _stretch_param(p), pairs, slack)
