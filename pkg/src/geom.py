"""Points, hyperbolic domains and the Euclidean midpoint rotation."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Tuple, Union

import numpy as np

from src.errors import DegenerateMidpointError, DomainError, ZeroChordError
from src.specfun import Dimension

PointLike = Union[complex, np.ndarray, Tuple[float, ...], list]


def as_point(value: PointLike) -> np.ndarray:
    """
    Convert a point description into a float vector.

    Complex numbers are read as planar points (re -> e1, im -> e2).

    Example:
        >>> as_point(0.6 + 0.3j)
        array([0.6, 0.3])
    """
    if isinstance(value, (complex, np.complexfloating)):
        return np.array([value.real, value.imag], dtype=float)
    point = np.asarray(value, dtype=float)
    if point.ndim != 1 or point.size < 2:
        raise DomainError(f"A point needs at least two coordinates, got {value!r}")
    if not np.all(np.isfinite(point)):
        raise DomainError(f"Point coordinates must be finite, got {value!r}")
    return point


def as_planar_point(value: PointLike) -> np.ndarray:
    """Convert a point description into a vector of R^2."""
    point = as_point(value)
    if point.size != 2:
        raise DomainError(f"Expected a planar point, got dimension {point.size}")
    return point


def _norm_gap(point: np.ndarray) -> float:
    # 1 - |x|^2 without forming |x|^2 first
    norm = float(np.linalg.norm(point))
    return (1.0 - norm) * (1.0 + norm)


class DomainKind(Enum):
    """The two model domains of hyperbolic geometry."""
    UNIT_BALL = "unit-ball"
    HALF_SPACE = "half-space"


@dataclass(frozen=True)
class DomainSpec:
    """A hyperbolic-type domain: the unit ball B^n or the half-space H^n."""
    kind: DomainKind
    n: int = 2

    def __post_init__(self):
        Dimension(self.n)
        if not isinstance(self.kind, DomainKind):
            raise DomainError(f"Unknown domain kind: {self.kind!r}")

    @classmethod
    def unit_ball(cls, n: int = 2) -> "DomainSpec":
        return cls(DomainKind.UNIT_BALL, n)

    @classmethod
    def half_space(cls, n: int = 2) -> "DomainSpec":
        return cls(DomainKind.HALF_SPACE, n)

    def contains(self, value: PointLike) -> bool:
        """Membership test; never raises."""
        try:
            point = as_point(value)
        except DomainError:
            return False
        if point.size != self.n:
            return False
        if self.kind is DomainKind.UNIT_BALL:
            return float(np.linalg.norm(point)) < 1.0
        return point[-1] > 0.0

    def require(self, value: PointLike) -> np.ndarray:
        """Return the point as a vector, raising DomainError if it is outside."""
        if not self.contains(value):
            raise DomainError(f"Point {value!r} is not in the {self.kind.value} of dimension {self.n}")
        return as_point(value)

    def half_rho_terms(self, x: PointLike, y: PointLike) -> Tuple[float, float]:
        """
        The pair (|x - y|, R) with sh(rho(x, y)/2) = |x - y| / R.

        R is sqrt(1 - |x|^2) sqrt(1 - |y|^2) in the ball and 2 sqrt(x_n) sqrt(y_n)
        in the half-space; neither factor is squared, so tiny heights stay representable.
        """
        x, y = self.require(x), self.require(y)
        chord = math.hypot(*(float(t) for t in x - y))
        if self.kind is DomainKind.UNIT_BALL:
            root = math.sqrt(_norm_gap(x)) * math.sqrt(_norm_gap(y))
        else:
            root = 2.0 * math.sqrt(float(x[-1])) * math.sqrt(float(y[-1]))
        return chord, root

    def rho(self, x: PointLike, y: PointLike) -> float:
        """Hyperbolic distance in this domain."""
        chord, root = self.half_rho_terms(x, y)
        if chord <= root:
            return 2.0 * math.asinh(chord / root)
        # asinh(u) = log u + log(1 + sqrt(1 + 1/u^2)), with u = chord / root possibly overflowing
        return 2.0 * (math.log(chord) - math.log(root) + math.log1p(math.hypot(1.0, root / chord)))

    def th_sech_half_rho(self, x: PointLike, y: PointLike) -> Tuple[float, float]:
        """th(rho/2) and sech(rho/2), each to full relative precision."""
        chord, root = self.half_rho_terms(x, y)
        hyp = math.hypot(chord, root)
        return chord / hyp, root / hyp


UNIT_DISK = DomainSpec.unit_ball(2)
UPPER_HALF_PLANE = DomainSpec.half_space(2)


def rho_ball(x: PointLike, y: PointLike) -> float:
    """
    Hyperbolic distance in the unit ball.

    sh^2(rho/2) = |x - y|^2 / ((1 - |x|^2)(1 - |y|^2))

    Example:
        >>> abs(rho_ball([0, 0], [0.5, 0]) - math.log(3)) < 1e-15
        True
    """
    x = as_point(x)
    return DomainSpec.unit_ball(x.size).rho(x, y)


def rho_halfspace(x: PointLike, y: PointLike) -> float:
    """
    Hyperbolic distance in the upper half-space.

    ch(rho) = 1 + |x - y|^2 / (2 x_n y_n)
    """
    x = as_point(x)
    return DomainSpec.half_space(x.size).rho(x, y)


class EuclideanBall(NamedTuple):
    center: np.ndarray
    radius: float


def hyp_ball_to_euclidean(x: PointLike, M: float) -> EuclideanBall:
    """
    Euclidean description of the hyperbolic ball B_rho(x, M) in the unit ball.

    Args:
        x: Hyperbolic center, |x| < 1
        M: Hyperbolic radius, M > 0

    Returns:
        EuclideanBall(center, radius)

    Example:
        >>> ball = hyp_ball_to_euclidean([0.0, 0.0], 1.0)
        >>> round(ball.radius, 6)
        0.462117
    """
    x = as_point(x)
    DomainSpec.unit_ball(x.size).require(x)
    if not M > 0.0 or math.isinf(M):
        raise DomainError(f"Hyperbolic radius must be finite and positive, got M = {M}")
    t = math.tanh(0.5 * M)
    norm_sq = float(np.dot(x, x))
    denominator = 1.0 - norm_sq * t * t
    center = x * (1.0 - t * t) / denominator
    radius = _norm_gap(x) * t / denominator
    return EuclideanBall(center, radius)


# ============================================================================
# EUCLIDEAN MIDPOINT ROTATION
# ============================================================================

@dataclass(frozen=True)
class RotationParams:
    """
    Midpoint-rotation coordinates of a planar pair.

    Attributes:
        d: Half chord |x - y| / 2
        k: Norm of the midpoint |x + y| / 2
        nu: Smaller angle between L(x, y) and L(0, (x + y)/2), in [0, pi/2]
    """
    d: float
    k: float
    nu: float

    def __post_init__(self):
        if not (0.0 < self.d < 1.0 and 0.0 < self.k < 1.0):
            raise DomainError(f"Expected d, k in (0, 1), got d = {self.d}, k = {self.k}")
        if not 0.0 <= self.nu <= 0.5 * math.pi:
            raise DomainError(f"Expected nu in [0, pi/2], got nu = {self.nu}")

    def at(self, nu: float) -> "RotationParams":
        return RotationParams(self.d, self.k, nu)


def _midpoint_frame(x: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    if not (UNIT_DISK.contains(x) and UNIT_DISK.contains(y)):
        raise DomainError(f"Both points must lie in the unit disk, got {x} and {y}")
    chord, total = x - y, x + y
    if not np.any(chord):
        raise ZeroChordError(f"The points coincide: {x}")
    if not np.any(total):
        raise DegenerateMidpointError(f"The points satisfy x = -y, midpoint is the origin: {x}, {y}")
    return chord, total


def rotation_params(x: PointLike, y: PointLike) -> RotationParams:
    """
    Midpoint-rotation coordinates (d, k, nu) of a planar pair.

    Raises:
        ZeroChordError: If x = y
        DegenerateMidpointError: If x = -y

    Example:
        >>> p = rotation_params(0.5 + 0.3j, 0.1 + 0.3j)
        >>> round(p.d, 12), round(p.nu, 12) == round(math.pi / 4, 12)
        (0.2, True)
    """
    x, y = as_planar_point(x), as_planar_point(y)
    chord, total = _midpoint_frame(x, y)
    cross = abs(float(chord[0] * total[1] - chord[1] * total[0]))
    dot = abs(float(np.dot(chord, total)))
    return RotationParams(
        d=0.5 * float(np.linalg.norm(chord)),
        k=0.5 * float(np.linalg.norm(total)),
        nu=math.atan2(cross, dot),
    )


def th_half_rho_rotated(p: RotationParams) -> float:
    """
    th(rho/2) of the pair with midpoint-rotation coordinates p.

    2d / sqrt((1 + d^2 - k^2)^2 + 4 k^2 d^2 sin^2(nu)); strictly decreasing
    in nu. The value is not clamped: when k + d > 1 it may reach 1 for small
    nu, where the rotated points would leave the disk.
    """
    return 2.0 * p.d / math.hypot(1.0 + p.d * p.d - p.k * p.k, 2.0 * p.k * p.d * math.sin(p.nu))


def rotate_about_midpoint(x: PointLike, y: PointLike, nu: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Rotate a planar pair about its Euclidean midpoint to the angle nu.

    Only rotations that increase the angle are accepted, so both rotated
    points stay inside the unit disk.
    """
    x, y = as_planar_point(x), as_planar_point(y)
    chord, total = _midpoint_frame(x, y)
    native = rotation_params(x, y).nu
    if not native <= nu <= 0.5 * math.pi:
        raise DomainError(f"Target angle must lie in [{native}, pi/2], got nu = {nu}")

    midpoint = 0.5 * total
    axis = total / np.linalg.norm(total)
    direction = chord / np.linalg.norm(chord)
    signed = math.atan2(
        axis[0] * direction[1] - axis[1] * direction[0], float(np.dot(axis, direction))
    )
    sign = 1.0 if signed >= 0.0 else -1.0
    theta = sign * nu if abs(signed) <= 0.5 * math.pi else sign * (math.pi - nu)
    c, s = math.cos(theta), math.sin(theta)
    rotated = np.array([c * axis[0] - s * axis[1], s * axis[0] + c * axis[1]])
    half_chord = 0.5 * float(np.linalg.norm(chord))
    return midpoint + half_chord * rotated, midpoint - half_chord * rotated
