"""Array responses, link budgets and line-of-sight channel realizations.

The ground terminal carries a uniform rectangular array (URA).  Each
satellite sees a pure line-of-sight channel h = alpha * a(phi), where the
steering vector a has unit-modulus entries determined by the satellite's
space angles and alpha collects path loss, antenna gains and a random
carrier phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import SpaceAngles

SPEED_OF_LIGHT = 299792458.0
"""Speed of light in m/s."""


@dataclass(frozen=True)
class UraConfig:
    """Uniform rectangular array on a regular n_x-by-n_y grid.

    Parameters
    ----------
    n_x, n_y : int
        Antenna counts along the two array axes, >= 1.
    antenna_spacing : float
        Element spacing in m (same along both axes).
    carrier_frequency : float
        Carrier frequency in Hz.
    """

    n_x: int
    n_y: int
    antenna_spacing: float
    carrier_frequency: float

    def __post_init__(self):
        if self.n_x < 1 or self.n_y < 1:
            raise ValueError("antenna counts must be >= 1")
        if self.antenna_spacing <= 0.0 or self.carrier_frequency <= 0.0:
            raise ValueError("spacing and carrier frequency must be > 0")

    @property
    def n_antennas(self) -> int:
        return self.n_x * self.n_y

    @property
    def wavenumber(self) -> float:
        """Carrier wavenumber 2*pi*f/c in rad/m."""
        return 2.0 * math.pi * self.carrier_frequency / SPEED_OF_LIGHT

    @property
    def phase_step(self) -> float:
        """Per-element phase gradient wavenumber * spacing, in rad."""
        return self.wavenumber * self.antenna_spacing


@dataclass(frozen=True)
class LinkBudget:
    """Scalar gains and noise entering the per-satellite link budget.

    tx_gain_dbi is the per-element transmit gain, rx_gain_dbi the satellite
    receive gain, noise_power the receiver noise power in W.
    """

    tx_gain_dbi: float
    rx_gain_dbi: float
    noise_power: float

    def __post_init__(self):
        if not self.noise_power > 0.0:
            raise ValueError("noise_power must be > 0")


def axis_response(n: int, phase_step: float, phi: float) -> np.ndarray:
    """One-axis array response exp(-j * phase_step * k * phi), k = 0..n-1."""
    return np.exp(-1j * phase_step * phi * np.arange(n))


def steering_vector(ura: UraConfig, angles: SpaceAngles) -> np.ndarray:
    """URA steering vector for the given space angles.

    Element k = n + (m-1)*n_y (m, n counted from 1 along x and y) carries
    the phase exp(-j * phase_step * ((m-1)*phi_x + (n-1)*phi_y)), i.e. the
    vector is the Kronecker product of the two axis responses.

    Parameters
    ----------
    ura : UraConfig
    angles : SpaceAngles

    Returns
    -------
    numpy.ndarray
        Complex vector of length ura.n_antennas with unit-modulus entries.
    """
    ax = axis_response(ura.n_x, ura.phase_step, angles.phi_x)
    ay = axis_response(ura.n_y, ura.phase_step, angles.phi_y)
    return np.kron(ax, ay)


def free_space_path_loss_db(distance: float, frequency: float) -> float:
    """Free-space path loss 20*log10(4*pi*d*f/c) in dB."""
    if not distance > 0.0:
        raise ValueError("distance must be > 0")
    return 20.0 * math.log10(4.0 * math.pi * distance * frequency / SPEED_OF_LIGHT)


def channel_gain_variance(
    distance: float, ura: UraConfig, budget: LinkBudget
) -> float:
    """Mean channel power gain sigma_alpha^2 of one satellite link.

    Deterministic budget: transmit element gain plus receive gain minus
    free-space path loss, converted to a linear power ratio.
    """
    gain_db = (
        budget.tx_gain_dbi
        + budget.rx_gain_dbi
        - free_space_path_loss_db(distance, ura.carrier_frequency)
    )
    return 10.0 ** (gain_db / 10.0)


def realize_gain(rng: np.random.Generator, gain_variance: float) -> complex:
    """Draw a channel gain sqrt(gain_variance) * exp(j*phi0), phi0 ~ U[0, 2pi).

    The magnitude is deterministic (pure line of sight); only the carrier
    phase is random.
    """
    if not gain_variance > 0.0:
        raise ValueError("gain_variance must be > 0")
    phase = rng.uniform(0.0, 2.0 * math.pi)
    return math.sqrt(gain_variance) * complex(math.cos(phase), math.sin(phase))


def perturb_angles(
    rng: np.random.Generator, angles: SpaceAngles, error_model
) -> SpaceAngles:
    """Contaminate space angles with independent draws from an error model.

    The result is intentionally not clipped to the unit disk; downstream
    consumers only evaluate complex exponentials, which stay well defined.
    """
    return SpaceAngles(
        phi_x=angles.phi_x + float(error_model.sample(rng)),
        phi_y=angles.phi_y + float(error_model.sample(rng)),
    )


def channel_vector(gain: complex, steering: np.ndarray) -> np.ndarray:
    """Line-of-sight channel h = gain * steering."""
    return gain * steering


def channel_matrix(channels: Sequence[np.ndarray]) -> np.ndarray:
    """Stack channel vectors into the matrix whose row l is h_l^H.

    Raises
    ------
    ValueError
        If the vectors do not all share one length.
    """
    if len(channels) == 0:
        raise ValueError("need at least one channel vector")
    lengths = {len(np.ravel(h)) for h in channels}
    if len(lengths) != 1:
        raise ValueError(f"channel vectors differ in length: {sorted(lengths)}")
    return np.conj(np.vstack([np.ravel(h) for h in channels]))
