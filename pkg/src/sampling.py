"""Seeded random samplers for the property suites.

All generators are numpy PCG64 streams. A run seed is split with
SeedSequence.spawn so every suite draws from its own independent stream and
adding a suite never shifts the samples of another.
"""

import math
from typing import List, Tuple

import numpy as np

from src.config import SAMPLING_RADIUS, SAMPLING_SEPARATION


def make_generator(seed: int) -> np.random.Generator:
    """PCG64 generator for a 64-bit seed."""
    return np.random.default_rng(seed)


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """
    Independent child generators of one seed, in a fixed order.

    Example:
        >>> a = spawn_generators(42, 3)[1].random()
        >>> b = spawn_generators(42, 3)[1].random()
        >>> a == b
        True
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


def sample_disk_point(rng: np.random.Generator, radius: float = SAMPLING_RADIUS) -> np.ndarray:
    """Uniform point of the disk |x| < radius, by rejection from the square."""
    while True:
        point = rng.uniform(-radius, radius, size=2)
        if float(np.linalg.norm(point)) < radius:
            return point


def sample_pair(
    rng: np.random.Generator,
    radius: float = SAMPLING_RADIUS,
    separation: float = SAMPLING_SEPARATION,
) -> Tuple[np.ndarray, np.ndarray]:
    """A pair of disk points with |x - y| and |x + y| at least `separation`."""
    while True:
        x, y = sample_disk_point(rng, radius), sample_disk_point(rng, radius)
        if np.linalg.norm(x - y) >= separation and np.linalg.norm(x + y) >= separation:
            return x, y


def sample_pairs(rng: np.random.Generator, count: int, radius: float = SAMPLING_RADIUS) -> List[Tuple[np.ndarray, np.ndarray]]:
    return [sample_pair(rng, radius) for _ in range(count)]


def sample_triples(
    rng: np.random.Generator, count: int, radius: float = SAMPLING_RADIUS
) -> List[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Triples of distinct disk points."""
    triples = []
    while len(triples) < count:
        x, y, z = (sample_disk_point(rng, radius) for _ in range(3))
        if not (np.array_equal(x, y) or np.array_equal(y, z) or np.array_equal(x, z)):
            triples.append((x, y, z))
    return triples


def sample_half_plane_point(rng: np.random.Generator, width: float = 10.0, heights: Tuple[float, float] = (1e-3, 10.0)) -> np.ndarray:
    """Point of the upper half-plane, horizontal coordinate uniform, height log-uniform."""
    log_low, log_high = math.log(heights[0]), math.log(heights[1])
    return np.array([rng.uniform(-width, width), math.exp(rng.uniform(log_low, log_high))])


def sample_unit_interval(rng: np.random.Generator) -> float:
    """Uniform r with 0 < r < 1."""
    while True:
        r = float(rng.random())
        if r > 0.0:
            return r


def sample_capacity_arg(rng: np.random.Generator, low: float, high: float) -> float:
    """s in (low, high] with s - low log-uniform over eight decades."""
    gap = (high - low) * 10.0 ** float(rng.uniform(-8.0, 0.0))
    return low + gap


def sample_increasing(rng: np.random.Generator, low: float, high: float, min_gap: float) -> Tuple[float, float]:
    """Two uniform values low <= a < b <= high with b - a >= min_gap."""
    while True:
        a, b = sorted(rng.uniform(low, high, size=2).tolist())
        if b - a >= min_gap:
            return a, b
