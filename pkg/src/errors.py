"""Exceptions raised by ModMetric."""

from typing import Any, Optional


class ModMetricError(ValueError):
    """Base class for all ModMetric errors."""


class DomainError(ModMetricError):
    """An argument lies outside the domain of the function."""


class DegenerateMidpointError(DomainError):
    """The pair satisfies x = -y, so its Euclidean midpoint is the origin."""


class ZeroChordError(DomainError):
    """The pair satisfies x = y where a nonzero chord is required."""


class DegeneratePairError(DomainError):
    """The Ferrand metric diverges for coincident points."""


class UnsupportedDimensionError(ModMetricError):
    """Exact modulus and Ferrand metrics are only available for n = 2."""


class ArgumentError(ModMetricError):
    """Invalid command or harness argument."""


class AssertionFailure(ModMetricError):
    """
    A property asserted by a harness command does not hold.

    Attributes:
        sample: The offending sample, serializable as JSON
    """

    def __init__(self, message: str, sample: Optional[Any] = None):
        super().__init__(message)
        self.sample = sample
