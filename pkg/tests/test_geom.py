"""Unit and property-based tests for domains, hyperbolic distance and midpoint rotation."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.errors import DegenerateMidpointError, DomainError, ZeroChordError
from src.geom import (
    UNIT_DISK,
    UPPER_HALF_PLANE,
    DomainSpec,
    RotationParams,
    as_point,
    as_planar_point,
    hyp_ball_to_euclidean,
    rho_ball,
    rho_halfspace,
    rotate_about_midpoint,
    rotation_params,
    th_half_rho_rotated,
)

disk_points = st.builds(
    lambda r, theta: [r * math.cos(theta), r * math.sin(theta)],
    st.floats(min_value=0.0, max_value=0.99),
    st.floats(min_value=0.0, max_value=2.0 * math.pi),
)

half_plane_points = st.builds(
    lambda a, b: [a, b],
    st.floats(min_value=-10.0, max_value=10.0),
    st.floats(min_value=1e-2, max_value=10.0),
)


class TestPoints:
    """Unit tests for point conversion."""

    def test_complex_to_point(self):
        """Complex numbers become planar vectors."""
        assert as_point(0.6 + 0.3j).tolist() == [0.6, 0.3]

    def test_rejects_scalar(self):
        """A point needs at least two coordinates."""
        with pytest.raises(DomainError):
            as_point(0.5)

    def test_rejects_nan(self):
        """Coordinates must be finite."""
        with pytest.raises(DomainError):
            as_point([math.nan, 0.0])

    def test_planar_rejects_3d(self):
        """as_planar_point only accepts R^2."""
        with pytest.raises(DomainError):
            as_planar_point([0.1, 0.2, 0.3])


class TestDomainSpec:
    """Unit tests for domain membership."""

    def test_disk_membership(self):
        """The open unit disk excludes its boundary."""
        assert UNIT_DISK.contains([0.5, 0.0])
        assert not UNIT_DISK.contains([1.0, 0.0])
        assert not UNIT_DISK.contains(0.8 + 0.8j)

    def test_half_plane_membership(self):
        """The upper half-plane excludes the real axis."""
        assert UPPER_HALF_PLANE.contains([-3.0, 0.1])
        assert not UPPER_HALF_PLANE.contains([0.0, 0.0])

    def test_contains_never_raises(self):
        """Malformed input is simply not contained."""
        assert not UNIT_DISK.contains([math.nan, 0.0])
        assert not UNIT_DISK.contains([0.1, 0.1, 0.1])

    def test_require_raises(self):
        """require reports points outside the domain."""
        with pytest.raises(DomainError):
            UNIT_DISK.require([2.0, 0.0])

    def test_invalid_dimension(self):
        """Domains need n >= 2."""
        with pytest.raises(DomainError):
            DomainSpec.unit_ball(1)

    @given(x=disk_points, y=disk_points)
    def test_th_sech_complementary(self, x, y):
        """th^2 + sech^2 = 1."""
        th, sech = UNIT_DISK.th_sech_half_rho(x, y)
        assert th * th + sech * sech == pytest.approx(1.0, rel=1e-14)


class TestHyperbolicDistance:
    """Unit and property tests for rho in the disk and half-plane."""

    def test_rho_ball_origin(self):
        """rho(0, 0.5) = log 3."""
        assert rho_ball([0.0, 0.0], [0.5, 0.0]) == pytest.approx(math.log(3.0), rel=1e-15)

    def test_rho_ball_three_dimensional(self):
        """rho_B3(0, r e1) = log((1 + r)/(1 - r))."""
        assert rho_ball([0.0, 0.0, 0.0], [0.0, 0.0, 0.6]) == pytest.approx(math.log(4.0), rel=1e-15)

    def test_rho_halfspace_vertical(self):
        """rho_H(i, 2i) = log 2."""
        assert rho_halfspace([0.0, 1.0], [0.0, 2.0]) == pytest.approx(math.log(2.0), rel=1e-15)

    def test_rho_halfspace_horizontal(self):
        """rho_H(i, 1 + i) = arcosh(3/2) = 0.962424..."""
        assert rho_halfspace([0.0, 1.0], [1.0, 1.0]) == pytest.approx(math.acosh(1.5), rel=1e-15)
        assert round(rho_halfspace([0.0, 1.0], [1.0, 1.0]), 6) == 0.962424

    def test_rho_halfspace_tiny_heights(self):
        """Heights of 1e-200 give rho = 2 log(1e200) rather than a division by zero."""
        x, y = [0.0, 1e-200], [1.0, 1e-200]
        assert rho_halfspace(x, y) == pytest.approx(400.0 * math.log(10.0), rel=1e-12)
        th, sech = UPPER_HALF_PLANE.th_sech_half_rho(x, y)
        assert th == 1.0
        assert sech == pytest.approx(2e-200, rel=1e-12)

    def test_rho_ball_tiny_chord(self):
        """A chord of 1e-200 is not lost to underflow."""
        assert rho_ball([0.0, 0.0], [1e-200, 0.0]) == pytest.approx(2e-200, rel=1e-12)

    def test_rho_identity(self):
        """rho(x, x) = 0."""
        assert rho_ball([0.3, -0.2], [0.3, -0.2]) == 0.0

    @given(x=disk_points, y=disk_points)
    def test_rho_ball_symmetric(self, x, y):
        """rho(x, y) = rho(y, x)."""
        assert rho_ball(x, y) == pytest.approx(rho_ball(y, x), rel=1e-14, abs=1e-300)

    @given(x=disk_points, y=disk_points, z=disk_points)
    def test_rho_ball_triangle(self, x, y, z):
        """rho(x, z) <= rho(x, y) + rho(y, z)."""
        assert rho_ball(x, z) <= rho_ball(x, y) + rho_ball(y, z) + 1e-10

    @given(x=half_plane_points, y=half_plane_points, shift=st.floats(-5.0, 5.0), scale=st.floats(0.1, 10.0))
    def test_halfspace_similarity_invariance(self, x, y, shift, scale):
        """rho_H is invariant under horizontal shifts and positive dilations."""
        moved_x = [scale * (x[0] + shift), scale * x[1]]
        moved_y = [scale * (y[0] + shift), scale * y[1]]
        assert rho_halfspace(moved_x, moved_y) == pytest.approx(rho_halfspace(x, y), rel=1e-9, abs=1e-9)


class TestHyperbolicBall:
    """Unit tests for the Euclidean description of hyperbolic balls."""

    def test_centered_ball(self):
        """B_rho(0, M) is the Euclidean ball of radius th(M/2)."""
        ball = hyp_ball_to_euclidean([0.0, 0.0], 1.0)
        assert ball.center.tolist() == [0.0, 0.0]
        assert ball.radius == pytest.approx(math.tanh(0.5), rel=1e-15)

    def test_off_center_ball(self):
        """x = 0.5, M = 1 gives center 0.415401..., radius 0.366135..."""
        ball = hyp_ball_to_euclidean([0.5, 0.0], 1.0)
        assert ball.center[0] == pytest.approx(0.415401, abs=1e-6)
        assert ball.radius == pytest.approx(0.366135, abs=1e-6)

    @given(x=disk_points, M=st.floats(min_value=0.01, max_value=3.0))
    def test_boundary_at_distance_M(self, x, M):
        """Both points of the Euclidean sphere on the line through 0 and x are at distance M."""
        x = np.array(x)
        ball = hyp_ball_to_euclidean(x, M)
        direction = x / np.linalg.norm(x) if np.linalg.norm(x) > 0 else np.array([1.0, 0.0])
        for sign in (1.0, -1.0):
            boundary = ball.center + sign * ball.radius * direction
            assert rho_ball(x, boundary) == pytest.approx(M, rel=1e-8)

    def test_rejects_nonpositive_radius(self):
        """M must be positive."""
        with pytest.raises(DomainError):
            hyp_ball_to_euclidean([0.1, 0.1], 0.0)


class TestRotationParams:
    """Unit tests for midpoint-rotation coordinates."""

    def test_diagonal_example(self):
        """x = 0.5 + 0.3i, y = 0.1 + 0.3i has d = 0.2, k = 0.3 sqrt 2, nu = pi/4."""
        params = rotation_params(0.5 + 0.3j, 0.1 + 0.3j)
        assert params.d == pytest.approx(0.2)
        assert params.k == pytest.approx(0.3 * math.sqrt(2.0))
        assert params.nu == pytest.approx(math.pi / 4)

    def test_collinear_pair(self):
        """Pairs on a line through 0 have nu = 0."""
        assert rotation_params(0.5 + 0j, 0.25 + 0j).nu == 0.0

    def test_equal_norm_pair(self):
        """Pairs with |x| = |y| have nu = pi/2."""
        assert rotation_params(0.3 + 0.4j, 0.4 + 0.3j).nu == pytest.approx(math.pi / 2)

    def test_rejects_coincident(self):
        """x = y has no chord."""
        with pytest.raises(ZeroChordError):
            rotation_params(0.2 + 0.1j, 0.2 + 0.1j)

    def test_rejects_antipodal(self):
        """x = -y has its midpoint at the origin."""
        with pytest.raises(DegenerateMidpointError):
            rotation_params(0.2 + 0.1j, -0.2 - 0.1j)

    def test_rejects_outside(self):
        """Both points must lie in the disk."""
        with pytest.raises(DomainError):
            rotation_params(1.2 + 0j, 0.1 + 0j)

    def test_params_validation(self):
        """RotationParams checks its ranges."""
        with pytest.raises(DomainError):
            RotationParams(0.0, 0.5, 0.1)
        with pytest.raises(DomainError):
            RotationParams(0.2, 0.5, 2.0)

    @given(x=disk_points, y=disk_points)
    def test_parametric_th_matches_native(self, x, y):
        """th(rho/2) computed from (d, k, nu) equals the direct value."""
        x, y = np.array(x), np.array(y)
        if np.linalg.norm(x - y) < 1e-6 or np.linalg.norm(x + y) < 1e-6:
            return
        th, _ = UNIT_DISK.th_sech_half_rho(x, y)
        assert th_half_rho_rotated(rotation_params(x, y)) == pytest.approx(th, rel=1e-9)

    def test_parametric_th_decreasing(self):
        """th(rho/2) decreases as nu goes from 0 to pi/2."""
        params = RotationParams(0.3, 0.4, 0.0)
        values = [th_half_rho_rotated(params.at(nu)) for nu in np.linspace(0.0, math.pi / 2, 20)]
        assert all(a > b for a, b in zip(values, values[1:]))


class TestRotateAboutMidpoint:
    """Unit tests for the midpoint rotation itself."""

    def test_rotation_keeps_midpoint_and_chord(self):
        """The rotated pair has the same midpoint and half chord."""
        x, y = rotate_about_midpoint(0.5 + 0.3j, 0.1 + 0.3j, math.pi / 2)
        assert (0.5 * (x + y)).tolist() == pytest.approx([0.3, 0.3])
        assert 0.5 * np.linalg.norm(x - y) == pytest.approx(0.2)

    def test_rotation_reaches_target_angle(self):
        """The rotated pair has the requested nu and the parametric th."""
        x, y = rotate_about_midpoint(0.6 + 0.3j, 0.1 + 0.1j, 1.2)
        params = rotation_params(x, y)
        assert params.nu == pytest.approx(1.2, abs=1e-12)
        th, _ = UNIT_DISK.th_sech_half_rho(x, y)
        assert th == pytest.approx(th_half_rho_rotated(params), rel=1e-12)

    def test_rotation_rejects_smaller_angle(self):
        """Rotations towards the midpoint axis are refused."""
        with pytest.raises(DomainError):
            rotate_about_midpoint(0.5 + 0.3j, 0.1 + 0.3j, 0.1)
