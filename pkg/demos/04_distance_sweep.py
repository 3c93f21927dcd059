# Rate vs inter-satellite distance with perfect position knowledge.
#
# Small spacings leave the satellites' steering vectors nearly parallel:
# per-satellite decoding wastes most of the capacity.  Around a few tens
# of kilometres the vectors decorrelate and the simple per-satellite
# scheme closes the gap to the cooperative bound; after that the curve is
# nearly flat and slowly pays for the growing slant ranges.
#
# Writes distance_sweep_demo.csv and (if matplotlib is present) a PNG.

from dataclasses import replace

import numpy as np

from swarmlink import ExperimentConfig, run_distance_sweep

cfg = replace(
    ExperimentConfig(),
    centroid_elevation_deg=45.0,
    error_model_name="none",
    trials=10,
    seed=4,
)

result = run_distance_sweep(cfg, workers=2)
result.write_csv("distance_sweep_demo.csv")

grid_km = np.array(result.grid_values) / 1e3
cap = result.rates_for("capacity")
rate = result.rates_for("perfect")
best = grid_km[int(np.argmax(rate))]

print("spacing [km]   capacity   per-satellite rate   gap")
for g, c, r in zip(grid_km, cap, rate):
    print(f"  {g:9.2f}   {c:8.4f}   {r:18.4f}   {(c - r) / c * 100:5.2f}%")
print(f"\nbest spacing on this grid: {best:.1f} km")
print("wrote distance_sweep_demo.csv")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.semilogx(grid_km, cap, "k--", label="capacity (cooperative bound)")
    ax.semilogx(grid_km, rate, "o-", label="per-satellite decoding")
    ax.axvline(best, color="grey", lw=0.8)
    ax.set_xlabel("inter-satellite distance [km]")
    ax.set_ylabel("rate [bits/channel use]")
    ax.legend()
    fig.tight_layout()
    fig.savefig("distance_sweep_demo.png", dpi=130)
    print("wrote distance_sweep_demo.png")
except ImportError:
    pass
