"""Terminal-centric satellite geometry.

All positions are expressed in a frame anchored at the transmitting ground
terminal: the x/y axes lie in the array plane, z points to zenith.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

EARTH_RADIUS = 6371e3
"""Mean Earth radius in m (spherical model)."""

TWO_PI = 2.0 * math.pi


class SpaceAngles(NamedTuple):
    """Direction-cosine pair (phi_x, phi_y) of a transmit direction.

    phi_x = cos(elevation) * cos(azimuth) and phi_y = cos(elevation) *
    sin(azimuth) are the projections of the unit line-of-sight vector onto
    the array axes.  For a physical direction phi_x**2 + phi_y**2 =
    cos(elevation)**2 <= 1; estimates contaminated by additive errors may
    leave the unit disk and are still accepted everywhere downstream.
    """

    phi_x: float
    phi_y: float


@dataclass(frozen=True)
class SatellitePosition:
    """Spherical position of one satellite as seen from the terminal.

    Parameters
    ----------
    distance : float
        Slant range in m, > 0.
    elevation : float
        Elevation angle in rad, within [0, pi/2].
    azimuth : float
        Azimuth angle in rad; stored wrapped to [0, 2*pi).
    """

    distance: float
    elevation: float
    azimuth: float

    def __post_init__(self):
        if not self.distance > 0.0:
            raise ValueError(f"distance must be > 0, got {self.distance}")
        if not 0.0 <= self.elevation <= math.pi / 2:
            raise ValueError(
                f"elevation must lie in [0, pi/2], got {self.elevation}"
            )
        object.__setattr__(self, "azimuth", self.azimuth % TWO_PI)

    def cartesian(self) -> np.ndarray:
        """Cartesian coordinates (x, y, z) in m."""
        cos_el = math.cos(self.elevation)
        return self.distance * np.array(
            [
                cos_el * math.cos(self.azimuth),
                cos_el * math.sin(self.azimuth),
                math.sin(self.elevation),
            ]
        )

    @classmethod
    def from_cartesian(cls, xyz) -> "SatellitePosition":
        x, y, z = (float(v) for v in xyz)
        d = math.sqrt(x * x + y * y + z * z)
        if d == 0.0:
            raise ValueError("cannot convert the origin to a satellite position")
        return cls(distance=d, elevation=math.asin(z / d), azimuth=math.atan2(y, x))


@dataclass(frozen=True)
class SwarmGeometry:
    """A rigid satellite formation plus the parameters that generated it.

    Invariant: all pairwise inter-satellite distances agree with
    ``inter_sat_distance`` to 1e-6 relative (checked at construction).
    """

    positions: tuple[SatellitePosition, ...]
    inter_sat_distance: float
    altitude: float

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        pts = [p.cartesian() for p in self.positions]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                gap = float(np.linalg.norm(pts[i] - pts[j]))
                tol = max(1e-6 * self.inter_sat_distance, 1e-9)
                if abs(gap - self.inter_sat_distance) > tol:
                    raise ValueError(
                        "pairwise distance %.6g between satellites %d and %d "
                        "does not match the declared spacing %.6g"
                        % (gap, i, j, self.inter_sat_distance)
                    )

    @property
    def n_satellites(self) -> int:
        return len(self.positions)

    def space_angles(self) -> list[SpaceAngles]:
        return [space_angles(p) for p in self.positions]

    def distances(self) -> np.ndarray:
        return np.array([p.distance for p in self.positions])


def space_angles(pos: SatellitePosition) -> SpaceAngles:
    """Direction cosines of a satellite position along the array axes.

    Parameters
    ----------
    pos : SatellitePosition

    Returns
    -------
    SpaceAngles
        (cos(el) * cos(az), cos(el) * sin(az)).
    """
    cos_el = math.cos(pos.elevation)
    return SpaceAngles(
        phi_x=cos_el * math.cos(pos.azimuth),
        phi_y=cos_el * math.sin(pos.azimuth),
    )


def slant_range(
    altitude: float, elevation: float, earth_radius: float = EARTH_RADIUS
) -> float:
    """Terminal-to-satellite range for a spherical Earth.

    Solves the terminal / satellite / Earth-center triangle:
    d = sqrt(R^2 sin(el)^2 + 2 R h + h^2) - R sin(el).

    Parameters
    ----------
    altitude : float
        Satellite altitude above the surface in m, > 0.
    elevation : float
        Elevation angle at the terminal in rad, within [0, pi/2].
    earth_radius : float
        Earth radius in m.
    """
    if not altitude > 0.0:
        raise ValueError(f"altitude must be > 0, got {altitude}")
    if not 0.0 <= elevation <= math.pi / 2:
        raise ValueError(f"elevation must lie in [0, pi/2], got {elevation}")
    r_sin = earth_radius * math.sin(elevation)
    return math.sqrt(r_sin * r_sin + 2.0 * earth_radius * altitude + altitude * altitude) - r_sin


def triangle_swarm(
    centroid_elevation: float,
    centroid_azimuth: float,
    altitude: float,
    inter_sat_distance: float,
    min_elevation: float = math.radians(30.0),
    earth_radius: float = EARTH_RADIUS,
) -> SwarmGeometry:
    """Place three satellites on an equilateral triangle around a centroid ray.

    The swarm centroid sits on the ray (centroid_elevation,
    centroid_azimuth) at the slant range implied by ``altitude``.  The
    triangle lies in the plane orthogonal to that ray, with one vertex
    aligned with the projection of local north (+y) onto the plane, so
    pairwise distances are exactly ``inter_sat_distance`` and invariant
    under centroid azimuth rotations.

    Parameters
    ----------
    centroid_elevation, centroid_azimuth : float
        Direction of the swarm centroid in rad.
    altitude : float
        Orbit altitude in m used to derive the centroid slant range.
    inter_sat_distance : float
        Triangle side length in m, >= 0 (0 collapses all three satellites
        onto the centroid).
    min_elevation : float
        Lowest admissible centroid elevation in rad.

    Raises
    ------
    ValueError
        If the centroid elevation is below ``min_elevation``.
    """
    if inter_sat_distance < 0.0:
        raise ValueError("inter_sat_distance must be >= 0")
    if centroid_elevation < min_elevation:
        raise ValueError(
            "centroid elevation %.6g rad is below the minimum elevation %.6g rad"
            % (centroid_elevation, min_elevation)
        )

    centroid_range = slant_range(altitude, centroid_elevation, earth_radius)
    ray = np.array(
        [
            math.cos(centroid_elevation) * math.cos(centroid_azimuth),
            math.cos(centroid_elevation) * math.sin(centroid_azimuth),
            math.sin(centroid_elevation),
        ]
    )
    centroid = centroid_range * ray

    # In-plane basis: e1 along projected north (+y), e2 completes it.
    north = np.array([0.0, 1.0, 0.0])
    e1 = north - np.dot(north, ray) * ray
    if np.linalg.norm(e1) < 1e-12:  # ray parallel to north: use east instead
        east = np.array([1.0, 0.0, 0.0])
        e1 = east - np.dot(east, ray) * ray
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(ray, e1)

    circumradius = inter_sat_distance / math.sqrt(3.0)
    positions = []
    for k in range(3):
        psi = TWO_PI * k / 3.0
        vertex = centroid + circumradius * (math.cos(psi) * e1 + math.sin(psi) * e2)
        positions.append(SatellitePosition.from_cartesian(vertex))
    return SwarmGeometry(
        positions=tuple(positions),
        inter_sat_distance=inter_sat_distance,
        altitude=altitude,
    )
