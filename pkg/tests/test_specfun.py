"""Unit and property-based tests for the special functions."""

import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from src.errors import DomainError
from src.specfun import (
    CapacityArg,
    Dimension,
    UnitInterval,
    agm,
    constant_cn,
    ellip_k,
    gamma2,
    grotzsch_mu,
    grotzsch_mu_pair,
    grotzsch_mu_upper_log,
    surface_area_omega,
    tau2,
)

SQRT2 = math.sqrt(2.0)

moduli = st.floats(min_value=1e-6, max_value=1.0 - 1e-6, allow_nan=False)


def mp_grotzsch_mu(r: float) -> float:
    """mu(r) from mpmath's K(m), parameter m = r^2."""
    r = mpmath.mpf(r)
    return float(mpmath.pi / 2 * mpmath.ellipk(1 - r ** 2) / mpmath.ellipk(r ** 2))


class TestAgm:
    """Unit tests for the arithmetic-geometric mean."""

    def test_agm_known_value(self):
        """AGM(1, sqrt 2) is Gauss's constant 1.198140234735592..."""
        assert agm(1.0, SQRT2) == pytest.approx(1.198140234735592, rel=1e-15)

    def test_agm_equal_arguments(self):
        """AGM(a, a) = a."""
        assert agm(0.3, 0.3) == 0.3

    def test_agm_zero_argument(self):
        """AGM(a, 0) = 0."""
        assert agm(1.0, 0.0) == 0.0
        assert agm(0.0, 2.5) == 0.0

    def test_agm_rejects_negative(self):
        """Negative or non-finite arguments raise DomainError."""
        with pytest.raises(DomainError):
            agm(-1.0, 1.0)
        with pytest.raises(DomainError):
            agm(1.0, math.inf)

    @given(
        a=st.floats(min_value=1e-8, max_value=1e8),
        b=st.floats(min_value=1e-8, max_value=1e8),
    )
    def test_agm_matches_mpmath(self, a, b):
        """AGM agrees with mpmath to near machine precision."""
        assert agm(a, b) == pytest.approx(float(mpmath.agm(a, b)), rel=1e-14)

    @given(
        a=st.floats(min_value=1e-8, max_value=1e8),
        b=st.floats(min_value=1e-8, max_value=1e8),
    )
    def test_agm_between_means(self, a, b):
        """sqrt(ab) <= AGM(a, b) <= (a + b)/2."""
        value = agm(a, b)
        assert math.sqrt(a * b) * (1 - 1e-15) <= value <= 0.5 * (a + b) * (1 + 1e-15)


class TestEllipK:
    """Unit tests for the complete elliptic integral."""

    def test_ellip_k_at_zero(self):
        """K(0) = pi/2."""
        assert ellip_k(0.0) == math.pi / 2

    @pytest.mark.parametrize("r,expected", [
        (0.5, 1.685750354812596),
        (0.9, 2.280549138422770),
    ])
    def test_ellip_k_known_values(self, r, expected):
        """Reference values of K at r = 0.5 and r = 0.9."""
        assert ellip_k(r) == pytest.approx(expected, rel=1e-14)

    @given(r=st.floats(min_value=0.0, max_value=0.999999))
    def test_ellip_k_matches_mpmath(self, r):
        """K(r) equals mpmath.ellipk(r^2)."""
        assert ellip_k(r) == pytest.approx(float(mpmath.ellipk(mpmath.mpf(r) ** 2)), rel=1e-12)

    def test_ellip_k_rejects_one(self):
        """K diverges at r = 1."""
        with pytest.raises(DomainError):
            ellip_k(1.0)


class TestGrotzschMu:
    """Unit and property tests for the Grötzsch ring function."""

    def test_mu_fixed_point(self):
        """mu(1/sqrt 2) = pi/2."""
        assert grotzsch_mu(1.0 / SQRT2) == pytest.approx(math.pi / 2, rel=1e-15)

    def test_mu_known_value(self):
        """mu(0.5) = 2.0094..."""
        assert grotzsch_mu(0.5) == pytest.approx(mp_grotzsch_mu(0.5), rel=1e-13)
        assert round(grotzsch_mu(0.5), 4) == 2.0095

    def test_mu_accepts_unit_interval(self):
        """A validated UnitInterval is accepted as argument."""
        assert grotzsch_mu(UnitInterval(0.5)) == grotzsch_mu(0.5)

    @pytest.mark.parametrize("r", [0.0, 1.0, -0.2, 1.5, math.nan])
    def test_mu_rejects_outside_open_interval(self, r):
        """mu is only defined on (0, 1)."""
        with pytest.raises(DomainError):
            grotzsch_mu(r)

    def test_mu_small_argument_branch(self):
        """Below the asymptotic threshold mu(r) = log(4/r)."""
        assert grotzsch_mu(1e-13) == pytest.approx(math.log(4e13), rel=1e-15)
        assert grotzsch_mu(1e-10) == pytest.approx(math.log(4e10), rel=1e-12)

    def test_mu_pair_near_one(self):
        """The complementary branch keeps full precision when r' is tiny."""
        value = grotzsch_mu_pair(1.0, 1e-13)
        assert value == pytest.approx(math.pi ** 2 / (4.0 * math.log(4e13)), rel=1e-15)

    @settings(deadline=None)
    @given(r=moduli)
    def test_mu_matches_mpmath(self, r):
        """mu(r) agrees with the ratio of mpmath elliptic integrals."""
        assert grotzsch_mu(r) == pytest.approx(mp_grotzsch_mu(r), rel=1e-12)

    @given(r=moduli)
    def test_functional_identity(self, r):
        """mu(r) mu(r') = pi^2 / 4."""
        complement = UnitInterval(r).complement
        assert grotzsch_mu(r) * grotzsch_mu_pair(complement, r) == pytest.approx(math.pi ** 2 / 4, rel=1e-13)

    @given(r1=moduli, r2=moduli)
    def test_mu_decreasing(self, r1, r2):
        """mu is strictly decreasing on (0, 1)."""
        if r2 - r1 > 1e-9:
            assert grotzsch_mu(r1) > grotzsch_mu(r2)

    @given(r=moduli)
    def test_log_majorant(self, r):
        """mu(r) <= log(2(1 + r')/r)."""
        assert grotzsch_mu(r) <= grotzsch_mu_upper_log(r) * (1.0 + 1e-14)


class TestCapacities:
    """Unit tests for gamma_2 and tau_2."""

    def test_gamma2_singular_value(self):
        """gamma_2(1 + sqrt 2) = 2 sqrt 2."""
        assert gamma2(1.0 + SQRT2) == pytest.approx(2.0 * SQRT2, rel=1e-13)

    def test_tau2_singular_value(self):
        """tau_2(2 + 2 sqrt 2) = sqrt 2."""
        assert tau2(2.0 + 2.0 * SQRT2) == pytest.approx(SQRT2, rel=1e-13)

    def test_gamma2_accepts_capacity_arg(self):
        """CapacityArg instances are unwrapped."""
        assert gamma2(CapacityArg(3.0)) == gamma2(3.0)

    def test_gamma2_huge_argument(self):
        """gamma_2(s) stays finite beyond the overflow of s^2 and tends to 0."""
        assert gamma2(1e200) == pytest.approx(2.0 * math.pi / math.log(4e200), rel=1e-12)

    @pytest.mark.parametrize("s", [1.5, 2.0, 2.5, 10.0])
    def test_gamma2_matches_oracle(self, s):
        """Both forms of the complement agree with the mpmath value."""
        assert gamma2(s) == pytest.approx(2.0 * math.pi / mp_grotzsch_mu(1.0 / s), rel=1e-12)

    @pytest.mark.parametrize("s", [1.0, 0.5, math.inf])
    def test_gamma2_rejects(self, s):
        """gamma_2 needs finite s > 1."""
        with pytest.raises(DomainError):
            gamma2(s)

    def test_tau2_rejects_nonpositive(self):
        """tau_2 needs t > 0."""
        with pytest.raises(DomainError):
            tau2(0.0)

    @given(t=st.floats(min_value=1e-6, max_value=1e6))
    def test_tau2_from_gamma2(self, t):
        """tau_2(t) = gamma_2(sqrt(t + 1)) / 2."""
        assert tau2(t) == pytest.approx(0.5 * gamma2(math.sqrt(t + 1.0)), rel=1e-9)

    @given(s1=st.floats(min_value=1.001, max_value=1e4), s2=st.floats(min_value=1.001, max_value=1e4))
    def test_gamma2_decreasing(self, s1, s2):
        """gamma_2 is decreasing in s."""
        if s2 - s1 > 1e-9 * s2:
            assert gamma2(s1) > gamma2(s2)


class TestDimensionConstants:
    """Unit tests for omega_m and c_n."""

    @pytest.mark.parametrize("m,expected", [
        (0, 2.0),
        (1, 2.0 * math.pi),
        (2, 4.0 * math.pi),
        (3, 2.0 * math.pi ** 2),
    ])
    def test_surface_area(self, m, expected):
        """omega_0 = 2, omega_1 = 2 pi, omega_2 = 4 pi, omega_3 = 2 pi^2."""
        assert surface_area_omega(m) == pytest.approx(expected, rel=1e-14)

    def test_surface_area_rejects(self):
        """m must be a nonnegative integer."""
        with pytest.raises(DomainError):
            surface_area_omega(-1)
        with pytest.raises(DomainError):
            surface_area_omega(1.5)

    def test_c2_closed_form(self):
        """c_2 = 2/pi exactly."""
        assert constant_cn(2) == 2.0 / math.pi

    def test_c3_value(self):
        """c_3 = pi / (2 (B(1/4, 1/2)/2)^2) = 0.2285..."""
        integral = mpmath.beta(0.25, 0.5) / 2
        expected = float(0.25 * 2 * mpmath.pi / integral ** 2)
        assert constant_cn(3) == pytest.approx(expected, rel=1e-9)
        assert round(constant_cn(3), 4) == 0.2285

    def test_dimension_properties(self):
        """Dimension exposes omega_(n-1) and c_n."""
        dim = Dimension(3)
        assert dim.omega == pytest.approx(4.0 * math.pi)
        assert dim.c == constant_cn(3)

    @pytest.mark.parametrize("n", [1, 0, True, 2.5])
    def test_dimension_rejects(self, n):
        """Dimensions are integers n >= 2."""
        with pytest.raises(DomainError):
            Dimension(n)
