"""ModMetric - Conformally invariant modulus metrics, their bounds and property checks."""

__version__ = "0.1.0"
