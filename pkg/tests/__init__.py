"""Test suite for ModMetric."""
