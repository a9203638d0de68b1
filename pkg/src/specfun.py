"""Special functions behind the conformally invariant metrics.

The complete elliptic integral is evaluated through the arithmetic-geometric
mean, K(r) = pi / (2 AGM(1, r')), so the Grötzsch ring function reduces to a
ratio of two AGMs:

    mu(r) = (pi/2) K(r') / K(r) = (pi/2) AGM(1, r') / AGM(1, r)

with r' = sqrt(1 - r^2).
"""

import math
import numbers
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from scipy import integrate, special

from src.config import (
    AGM_MAX_ITERATIONS,
    AGM_RELATIVE_TOLERANCE,
    CN_QUADRATURE_LIMIT,
    CN_QUADRATURE_TOLERANCE,
    GROTZSCH_ASYMPTOTIC_THRESHOLD,
)
from src.errors import DomainError


# ============================================================================
# DOMAIN TYPES
# ============================================================================

@dataclass(frozen=True)
class UnitInterval:
    """A modulus r with 0 < r < 1."""
    r: float

    def __post_init__(self):
        if not 0.0 < self.r < 1.0:
            raise DomainError(f"Expected 0 < r < 1, got r = {self.r}")

    @property
    def complement(self) -> float:
        """r' = sqrt(1 - r^2), formed as sqrt((1 - r)(1 + r))."""
        return math.sqrt((1.0 - self.r) * (1.0 + self.r))


@dataclass(frozen=True)
class CapacityArg:
    """Argument s > 1 of the Grötzsch capacity."""
    s: float

    def __post_init__(self):
        if not self.s > 1.0 or math.isinf(self.s):
            raise DomainError(f"Expected finite s > 1, got s = {self.s}")


@dataclass(frozen=True)
class Dimension:
    """Euclidean dimension n >= 2."""
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, numbers.Integral) or self.n < 2:
            raise DomainError(f"Expected an integer dimension n >= 2, got n = {self.n!r}")

    @property
    def omega(self) -> float:
        """Surface area of the unit sphere S^(n-1)."""
        return surface_area_omega(self.n - 1)

    @property
    def c(self) -> float:
        """The dimensional constant c_n."""
        return constant_cn(self.n)


def as_unit_interval(r: Union[float, UnitInterval]) -> float:
    return r.r if isinstance(r, UnitInterval) else UnitInterval(float(r)).r


def as_capacity_arg(s: Union[float, CapacityArg]) -> float:
    return s.s if isinstance(s, CapacityArg) else CapacityArg(float(s)).s


def as_dimension(n: Union[int, Dimension]) -> int:
    return int(n.n if isinstance(n, Dimension) else Dimension(n).n)


# ============================================================================
# AGM AND ELLIPTIC INTEGRAL
# ============================================================================

def agm(a: float, b: float) -> float:
    """
    Arithmetic-geometric mean of two nonnegative reals.

    Args:
        a: First argument, a >= 0
        b: Second argument, b >= 0

    Returns:
        The common limit of a_{k+1} = (a_k + b_k)/2, b_{k+1} = sqrt(a_k b_k)

    Raises:
        DomainError: If an argument is negative or not finite

    Example:
        >>> agm(1.0, 1.0)
        1.0
        >>> agm(1.0, 0.0)
        0.0
    """
    if not (math.isfinite(a) and math.isfinite(b)) or a < 0.0 or b < 0.0:
        raise DomainError(f"AGM needs finite nonnegative arguments, got ({a}, {b})")
    if a == 0.0 or b == 0.0:
        return 0.0

    for _ in range(AGM_MAX_ITERATIONS):
        if abs(a - b) <= AGM_RELATIVE_TOLERANCE * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ellip_k(r: float) -> float:
    """
    Complete elliptic integral of the first kind K(r), 0 <= r < 1.

    Example:
        >>> ellip_k(0.0) == math.pi / 2
        True
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"K(r) needs 0 <= r < 1, got r = {r}")
    return math.pi / (2.0 * agm(1.0, math.sqrt((1.0 - r) * (1.0 + r))))


# ============================================================================
# GRÖTZSCH RING FUNCTION AND CAPACITIES
# ============================================================================

def grotzsch_mu_pair(r: float, r_complement: float) -> float:
    """
    Grötzsch ring function from an explicit complementary pair.

    Callers that know both r and r' = sqrt(1 - r^2) to full precision (for
    example th and sech of the same argument) pass them here instead of
    letting r' be recomputed from a rounded r.

    Args:
        r: The modulus, 0 < r <= 1
        r_complement: Its complement, 0 < r' <= 1

    Returns:
        mu(r) = (pi/2) K(r') / K(r)
    """
    if not (0.0 < r <= 1.0 and 0.0 < r_complement <= 1.0):
        raise DomainError(
            f"Expected a complementary pair in (0, 1], got ({r}, {r_complement})"
        )
    if r <= GROTZSCH_ASYMPTOTIC_THRESHOLD:
        return math.log(4.0 / r)
    if r_complement <= GROTZSCH_ASYMPTOTIC_THRESHOLD:
        # mu(r) mu(r') = pi^2 / 4
        return math.pi ** 2 / (4.0 * math.log(4.0 / r_complement))
    return 0.5 * math.pi * agm(1.0, r_complement) / agm(1.0, r)


def grotzsch_mu(r: Union[float, UnitInterval]) -> float:
    """
    Grötzsch ring function mu(r), 0 < r < 1; strictly decreasing.

    Example:
        >>> abs(grotzsch_mu(2 ** -0.5) - math.pi / 2) < 1e-15
        True
    """
    value = UnitInterval(as_unit_interval(r))
    return grotzsch_mu_pair(value.r, value.complement)


def grotzsch_mu_upper_log(r: Union[float, UnitInterval]) -> float:
    """Logarithmic majorant U(r) = log(2(1 + r')/r) of mu(r)."""
    value = UnitInterval(as_unit_interval(r))
    return math.log(2.0 * (1.0 + value.complement) / value.r)


def gamma2(s: Union[float, CapacityArg]) -> float:
    """
    Planar Grötzsch capacity gamma_2(s) = 2 pi / mu(1/s), s > 1.

    Example:
        >>> abs(gamma2(1 + 2 ** 0.5) - 2 * 2 ** 0.5) < 1e-12
        True
    """
    s = as_capacity_arg(s)
    if s <= 2.0:
        complement = math.sqrt((s - 1.0) * (s + 1.0)) / s
    else:
        # (s - 1)(s + 1) overflows for s beyond ~1e154
        complement = math.sqrt((1.0 - 1.0 / s) * (1.0 + 1.0 / s))
    return 2.0 * math.pi / grotzsch_mu_pair(1.0 / s, complement)


def tau2(t: float) -> float:
    """
    Planar Teichmüller capacity tau_2(t) = gamma_2(sqrt(t + 1)) / 2, t > 0.
    """
    if not t > 0.0 or math.isinf(t):
        raise DomainError(f"tau_2(t) needs finite t > 0, got t = {t}")
    # 1/sqrt(t+1) and its complement sqrt(t/(t+1)), exact for small t
    return math.pi / grotzsch_mu_pair(1.0 / math.sqrt(t + 1.0), math.sqrt(t / (t + 1.0)))


# ============================================================================
# DIMENSIONAL CONSTANTS
# ============================================================================

def surface_area_omega(m: int) -> float:
    """
    Surface area omega_m of the unit sphere S^m in R^(m+1).

    Example:
        >>> surface_area_omega(0)
        2.0
    """
    if isinstance(m, bool) or not isinstance(m, numbers.Integral) or m < 0:
        raise DomainError(f"omega_m needs an integer m >= 0, got m = {m!r}")
    half = 0.5 * (m + 1)
    return float(2.0 * math.pi ** half / special.gamma(half))


@lru_cache(maxsize=None)
def _constant_cn(n: int) -> float:
    if n == 2:
        return 2.0 / math.pi
    exponent = (2.0 - n) / (n - 1.0)
    # QUADPACK nodes are interior, so the singularity at t = 0 is never sampled
    integral, _ = integrate.quad(
        lambda t: math.sin(t) ** exponent,
        0.0,
        0.5 * math.pi,
        epsabs=CN_QUADRATURE_TOLERANCE,
        limit=CN_QUADRATURE_LIMIT,
    )
    return 2.0 ** (1 - n) * surface_area_omega(n - 2) * integral ** (1 - n)


def constant_cn(n: Union[int, Dimension]) -> float:
    """
    The constant c_n of the capacity estimates; c_2 = 2/pi.

    Example:
        >>> constant_cn(2) == 2 / math.pi
        True
    """
    return _constant_cn(as_dimension(n))
