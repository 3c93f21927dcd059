# Satellite swarm geometry from the ground terminal's point of view.
#
# Three satellites fly an equilateral triangle around a centroid ray.  This
# script places the swarm, prints the terminal-centric coordinates, and
# shows the two geometric facts the rest of the library leans on: pairwise
# distances are exact and azimuth-independent, and the slant range shrinks
# as the swarm climbs toward zenith.

import math

import numpy as np

from swarmlink import slant_range, space_angles, triangle_swarm

altitude = 600e3  # m
spacing = 40e3  # m

print("slant range vs elevation (600 km orbit):")
for elevation_deg in (30, 45, 60, 90):
    d = slant_range(altitude, math.radians(elevation_deg))
    print(f"  {elevation_deg:3d} deg -> {d / 1e3:8.1f} km")

print("\nswarm at 45 deg elevation, 40 km spacing:")
swarm = triangle_swarm(
    centroid_elevation=math.radians(45.0),
    centroid_azimuth=0.0,
    altitude=altitude,
    inter_sat_distance=spacing,
)
for k, pos in enumerate(swarm.positions):
    phi = space_angles(pos)
    print(
        f"  satellite {k}: d = {pos.distance / 1e3:8.2f} km, "
        f"el = {math.degrees(pos.elevation):6.2f} deg, "
        f"az = {math.degrees(pos.azimuth):7.2f} deg, "
        f"space angles = ({phi.phi_x:+.4f}, {phi.phi_y:+.4f})"
    )

print("\npairwise distances (should all equal the configured spacing):")
pts = [p.cartesian() for p in swarm.positions]
for i in range(3):
    for j in range(i + 1, 3):
        gap = np.linalg.norm(pts[i] - pts[j])
        print(f"  |{i}-{j}| = {gap / 1e3:.6f} km")

print("\nrotating the centroid azimuth leaves the formation rigid:")
for azimuth_deg in (0, 90, 215):
    s = triangle_swarm(math.radians(45.0), math.radians(azimuth_deg), altitude, spacing)
    pts = [p.cartesian() for p in s.positions]
    worst = max(
        abs(np.linalg.norm(pts[i] - pts[j]) - spacing)
        for i in range(3)
        for j in range(i + 1, 3)
    )
    print(f"  azimuth {azimuth_deg:3d} deg: max spacing error {worst:.2e} m")
