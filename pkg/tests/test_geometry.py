import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import brentq

from swarmlink.geometry import (
    EARTH_RADIUS,
    SatellitePosition,
    space_angles,
    slant_range,
    triangle_swarm,
)


def test_space_angles_zenith():
    pos = SatellitePosition(600e3, math.pi / 2, 1.234)
    phi = space_angles(pos)
    assert abs(phi.phi_x) < 1e-12
    assert abs(phi.phi_y) < 1e-12


def test_space_angles_horizon_along_x():
    phi = space_angles(SatellitePosition(600e3, 0.0, 0.0))
    assert phi.phi_x == pytest.approx(1.0, abs=1e-15)
    assert phi.phi_y == pytest.approx(0.0, abs=1e-15)


def test_space_angles_exact_trig():
    phi = space_angles(SatellitePosition(600e3, math.pi / 6, math.pi / 2))
    assert phi.phi_x == pytest.approx(0.0, abs=1e-12)
    assert phi.phi_y == pytest.approx(math.sqrt(3) / 2, rel=1e-15)


@given(
    elevation=st.floats(0.0, math.pi / 2),
    azimuth=st.floats(0.0, 2 * math.pi, exclude_max=True),
)
def test_space_angles_norm_contractive(elevation, azimuth):
    phi = space_angles(SatellitePosition(1.0, elevation, azimuth))
    norm = math.hypot(phi.phi_x, phi.phi_y)
    assert norm <= 1.0 + 1e-12
    assert norm == pytest.approx(math.cos(elevation), abs=1e-12)


def test_position_validation():
    with pytest.raises(ValueError):
        SatellitePosition(-1.0, 0.5, 0.0)
    with pytest.raises(ValueError):
        SatellitePosition(1.0, 2.0, 0.0)
    # azimuth wraps
    pos = SatellitePosition(1.0, 0.5, 2 * math.pi + 0.25)
    assert pos.azimuth == pytest.approx(0.25)


def test_triangle_swarm_degenerate_spacing_zero():
    swarm = triangle_swarm(math.pi / 2, 0.0, 600e3, 0.0)
    ref = swarm.positions[0]
    for pos in swarm.positions[1:]:
        assert pos.distance == pytest.approx(ref.distance, rel=1e-12)
        assert pos.elevation == pytest.approx(ref.elevation, abs=1e-12)
    assert ref.distance == pytest.approx(600e3, rel=1e-12)


@pytest.mark.parametrize(
    "elevation_deg,azimuth_deg,spacing",
    [(90.0, 0.0, 40e3), (45.0, 30.0, 40e3), (30.0, 200.0, 120e3), (60.0, 355.0, 1e3)],
)
def test_triangle_swarm_pairwise_distances(elevation_deg, azimuth_deg, spacing):
    swarm = triangle_swarm(
        math.radians(elevation_deg), math.radians(azimuth_deg), 600e3, spacing
    )
    pts = [p.cartesian() for p in swarm.positions]
    for i in range(3):
        for j in range(i + 1, 3):
            gap = np.linalg.norm(pts[i] - pts[j])
            assert gap == pytest.approx(spacing, rel=1e-9)


def test_triangle_swarm_zenith_slant_ranges():
    # circumradius of an equilateral triangle is side/sqrt(3); with the
    # triangle orthogonal to the zenith ray, Pythagoras gives the range
    spacing = 40e3
    swarm = triangle_swarm(math.pi / 2, 0.0, 600e3, spacing)
    centroid_range = slant_range(600e3, math.pi / 2)
    expected = math.sqrt(centroid_range**2 + (spacing / math.sqrt(3)) ** 2)
    for pos in swarm.positions:
        assert pos.distance == pytest.approx(expected, rel=1e-12)


def test_triangle_swarm_azimuth_rotation_invariance():
    for azimuth in (0.0, 0.7, 2.1, 4.4):
        swarm = triangle_swarm(math.radians(50.0), azimuth, 600e3, 75e3)
        pts = [p.cartesian() for p in swarm.positions]
        for i in range(3):
            for j in range(i + 1, 3):
                gap = np.linalg.norm(pts[i] - pts[j])
                assert gap == pytest.approx(75e3, rel=1e-9)


def test_triangle_swarm_rejects_low_elevation():
    with pytest.raises(ValueError):
        triangle_swarm(math.radians(10.0), 0.0, 600e3, 40e3)
    with pytest.raises(ValueError):
        triangle_swarm(math.radians(45.0), 0.0, 600e3, -1.0)


def test_slant_range_zenith_equals_altitude():
    assert slant_range(600e3, math.pi / 2) == pytest.approx(600e3, rel=1e-12)


def test_slant_range_vanishing_altitude():
    assert slant_range(1.0, math.radians(30.0)) < 10.0
    assert slant_range(1e-3, math.radians(60.0)) < 1e-2


def _slant_range_triangle_oracle(altitude, elevation, earth_radius):
    """Independent 2D construction: find the Earth-central angle at which the
    sight line to a satellite at radius earth_radius + altitude makes the
    requested elevation with the local horizon, then measure the chord."""
    r_t = earth_radius
    r_s = earth_radius + altitude

    def elevation_at(gamma):
        sat = np.array([r_s * math.sin(gamma), r_s * math.cos(gamma)])
        term = np.array([0.0, r_t])
        los = sat - term
        up = term / np.linalg.norm(term)
        horicomp = los - np.dot(los, up) * up
        return math.atan2(np.dot(los, up), np.linalg.norm(horicomp))

    gamma = brentq(lambda g: elevation_at(g) - elevation, 1e-12, math.pi / 2)
    sat = np.array([r_s * math.sin(gamma), r_s * math.cos(gamma)])
    return float(np.linalg.norm(sat - np.array([0.0, r_t])))


def test_slant_range_against_triangle_oracle():
    expected = _slant_range_triangle_oracle(600e3, math.radians(30.0), 6371e3)
    assert slant_range(600e3, math.radians(30.0), 6371e3) == pytest.approx(
        expected, rel=1e-9
    )


@given(
    altitude=st.floats(100e3, 2000e3),
    el_lo=st.floats(0.0, math.pi / 2 - 0.02),
    gap=st.floats(0.01, 0.5),
)
def test_slant_range_decreasing_in_elevation(altitude, el_lo, gap):
    el_hi = min(el_lo + gap, math.pi / 2)
    assert slant_range(altitude, el_hi) < slant_range(altitude, el_lo)
