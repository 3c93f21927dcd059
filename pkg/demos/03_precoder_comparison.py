# The three precoders side by side on one uncertain channel.
#
# Robust: maximizes the mean SLNR using only correlation matrices (the
# principal generalized eigenvector of the signal/leakage pencil).
# Heuristic: plugs the estimated steering vectors into the perfect-CSI
# formula.  Perfect: cheats with the true steering vectors as an upper
# reference.  With zero uncertainty all three coincide; as the error grows
# the robust design keeps more of the beamforming gain.

import math

import numpy as np

from swarmlink import (
    SlnrProblem,
    SpaceAngles,
    UniformError,
    UraConfig,
    channel_matrix,
    heuristic_precoder,
    mean_slnr,
    perfect_csi_precoder,
    realize_gain,
    perturb_angles,
    robust_precoder,
    sinr,
    steering_autocorrelation,
    steering_vector,
    sum_rate,
)

rng = np.random.default_rng(7)
ura = UraConfig(n_x=16, n_y=16, antenna_spacing=0.025, carrier_frequency=30e9)
true_angles = [SpaceAngles(0.30, -0.10), SpaceAngles(0.05, 0.25), SpaceAngles(-0.2, -0.3)]
gain_variances = np.array([1.0e-13, 0.8e-13, 1.2e-13])
noise_power = 1e-12
total_power = 31.6  # 15 dBW

true_steering = np.column_stack([steering_vector(ura, a) for a in true_angles])
gains = [realize_gain(rng, v) for v in gain_variances]
h = channel_matrix([g * true_steering[:, i] for i, g in enumerate(gains)])

for max_offset in (1e-6, 0.01, 0.02):
    error = UniformError(max_offset)
    estimated = [perturb_angles(rng, a, error) for a in true_angles]
    est_steering = np.column_stack([steering_vector(ura, a) for a in estimated])
    correlations = np.stack(
        [steering_autocorrelation(ura, a, error) for a in estimated]
    )
    problem = SlnrProblem(correlations, gain_variances, noise_power, total_power)

    designs = {
        "robust": robust_precoder(problem),
        "heuristic": heuristic_precoder(
            est_steering, gain_variances, noise_power, total_power
        ),
        "perfect": perfect_csi_precoder(
            true_steering, gain_variances, noise_power, total_power
        ),
    }
    print(f"\nuniform error half-width {max_offset}:")
    for name, g in designs.items():
        slnrs = [
            10 * math.log10(mean_slnr(g[:, s], problem, s)) for s in range(3)
        ]
        rate = sum_rate(sinr(h, g, noise_power))
        print(
            f"  {name:9s}: sum rate {rate:6.3f} bits, mean SLNR per satellite "
            + " ".join(f"{v:6.2f}" for v in slnrs)
            + " dB"
        )
