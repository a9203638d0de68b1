"""Tests for configuration helpers."""

import math

import pytest
from hypothesis import given, strategies as st

from src.config import (
    HOLDER_MONOTONE_FROM,
    holder_monotone_start,
    parse_complex_point,
    validate_metric_kind,
    validate_output_format,
    validate_probe_target,
)
from src.errors import ArgumentError


class TestValidators:
    """Membership checks for the option choices."""

    def test_output_formats(self):
        """csv and json are supported; nothing else is."""
        assert validate_output_format("csv")
        assert validate_output_format("json")
        assert not validate_output_format("xml")

    def test_metric_kinds(self):
        """The Hölder probe compares against Euclidean or hyperbolic distance."""
        assert validate_metric_kind("euclidean")
        assert validate_metric_kind("hyperbolic")
        assert not validate_metric_kind("chordal")

    def test_probe_targets(self):
        """The probe numerator is the modulus metric or the inverse Ferrand metric."""
        assert validate_probe_target("modulus")
        assert validate_probe_target("ferrand-inverse")
        assert not validate_probe_target("lambda")


class TestParseComplexPoint:
    """Parsing of 're,im' point arguments."""

    def test_valid_point(self):
        """Two reals separated by a comma."""
        assert parse_complex_point("0.6,0.3") == (0.6, 0.3)

    def test_whitespace_and_signs(self):
        """Surrounding spaces and signs are accepted."""
        assert parse_complex_point(" -0.5 , 1e-3 ") == (-0.5, 0.001)

    @pytest.mark.parametrize("text", ["0.5", "0.1,0.2,0.3", "", "a,b", "0.1,", "inf,0", "0,nan"])
    def test_rejects_invalid(self, text):
        """Anything other than two finite reals is an ArgumentError."""
        with pytest.raises(ArgumentError):
            parse_complex_point(text)

    @given(
        re_part=st.floats(allow_nan=False, allow_infinity=False),
        im_part=st.floats(allow_nan=False, allow_infinity=False),
    )
    def test_repr_round_trip(self, re_part, im_part):
        """Property: any pair of finite floats parses back unchanged."""
        assert parse_complex_point(f"{re_part!r},{im_part!r}") == (re_part, im_part)


class TestHolderMonotoneStart:
    """Start of the increasing range of the Hölder quotient."""

    @pytest.mark.parametrize("w,expected", [(0.25, 3), (0.5, 3), (1.0, 3), (0.1, 4)])
    def test_known_exponents(self, w, expected):
        """Small exponents push the start further out."""
        assert holder_monotone_start(w) == expected

    @given(w=st.floats(min_value=0.05, max_value=10.0))
    def test_never_below_default(self, w):
        """Property: the start is at least the default and past the turning point."""
        k = holder_monotone_start(w)
        assert k >= HOLDER_MONOTONE_FROM
        assert 10.0 ** -k <= max(4.0 * math.exp(-1.0 / w), 10.0 ** -HOLDER_MONOTONE_FROM) * (1.0 + 1e-12)

