"""Angle-error distributions and correlation matrices built from them.

The terminal never sees the true space angles, only estimates contaminated
by additive errors with a known symmetric distribution.  The second-order
statistics of the resulting steering vectors have a closed form: each
entry of the autocorrelation matrix is the error-free phase term times the
error distribution's characteristic function evaluated at the inter-element
phase lag.  Per axis this yields a Hermitian Toeplitz factor, and the full
matrix is the Kronecker product of the two axis factors.
"""

from __future__ import annotations

import abc
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .channel import UraConfig
from .geometry import SpaceAngles


def cf_uniform(t, max_offset: float):
    """Characteristic function sin(t*a)/(t*a) of U(-a, a), exactly 1 at t = 0."""
    if not max_offset > 0.0:
        raise ValueError("max_offset must be > 0")
    # numpy's sinc is sin(pi x)/(pi x)
    return np.sinc(np.asarray(t) * max_offset / np.pi)


def cf_gauss(t, std: float):
    """Characteristic function exp(-t^2 * std^2 / 2) of N(0, std^2)."""
    if not std > 0.0:
        raise ValueError("std must be > 0")
    return np.exp(-0.5 * (np.asarray(t) * std) ** 2)


class AngleErrorModel(abc.ABC):
    """A symmetric zero-mean space-angle error distribution.

    Exposes matching sampling and characteristic-function views of the same
    distribution; cf(0) = 1, |cf(t)| <= 1 and cf is even for every model.
    """

    @abc.abstractmethod
    def cf(self, t):
        """Characteristic function E[exp(j*t*error)] (real for symmetric laws)."""

    @abc.abstractmethod
    def sample(self, rng: np.random.Generator, size=None):
        """Draw errors from the distribution."""

    @property
    @abc.abstractmethod
    def variance(self) -> float:
        """Distribution variance."""


@dataclass(frozen=True)
class NoError(AngleErrorModel):
    """Degenerate point mass at zero: perfect position knowledge."""

    def cf(self, t):
        return np.ones_like(np.asarray(t, dtype=float))

    def sample(self, rng, size=None):
        return 0.0 if size is None else np.zeros(size)

    @property
    def variance(self) -> float:
        return 0.0


@dataclass(frozen=True)
class UniformError(AngleErrorModel):
    """Uniform error on [-max_offset, max_offset]."""

    max_offset: float

    def __post_init__(self):
        if not self.max_offset > 0.0:
            raise ValueError("max_offset must be > 0")

    def cf(self, t):
        return cf_uniform(t, self.max_offset)

    def sample(self, rng, size=None):
        return rng.uniform(-self.max_offset, self.max_offset, size)

    @property
    def variance(self) -> float:
        return self.max_offset**2 / 3.0


@dataclass(frozen=True)
class GaussianError(AngleErrorModel):
    """Zero-mean Gaussian error with standard deviation ``std``."""

    std: float

    def __post_init__(self):
        if not self.std > 0.0:
            raise ValueError("std must be > 0")

    def cf(self, t):
        return cf_gauss(t, self.std)

    def sample(self, rng, size=None):
        return rng.normal(0.0, self.std, size)

    @property
    def variance(self) -> float:
        return self.std**2

    @classmethod
    def matching_uniform(cls, max_offset: float) -> "GaussianError":
        """Gaussian with the same variance as UniformError(max_offset)."""
        return cls(std=max_offset / math.sqrt(3.0))


def axis_autocorrelation(
    n: int, phase_step: float, phi_hat: float, error_model: AngleErrorModel
) -> np.ndarray:
    """One-axis steering autocorrelation, a Hermitian Toeplitz n-by-n matrix.

    Entry (m, m') is exp(-j*phase_step*(m - m')*phi_hat) times the error
    characteristic function at lag phase_step*(m' - m); the CF of a
    symmetric distribution is even and real, so the matrix is Hermitian
    with unit diagonal.
    """
    lags = phase_step * np.arange(n)
    col = np.exp(-1j * lags * phi_hat) * error_model.cf(lags)
    return scipy.linalg.toeplitz(col, col.conj())


def steering_autocorrelation(
    ura: UraConfig, angles: SpaceAngles, error_model: AngleErrorModel
) -> np.ndarray:
    """Autocorrelation matrix of the URA steering vector under angle errors.

    Kronecker product of the two axis factors, matching the element order
    of :func:`swarmlink.channel.steering_vector`.  With ``NoError`` this
    collapses to the rank-one outer product of the estimated steering
    vector with itself.

    Parameters
    ----------
    ura : UraConfig
    angles : SpaceAngles
        Estimated space angles at which the statistics are centered.
    error_model : AngleErrorModel

    Returns
    -------
    numpy.ndarray
        Hermitian positive semidefinite matrix of size n_antennas with a
        unit diagonal.
    """
    rx, ry = axis_autocorrelations(ura, angles, error_model)
    return np.kron(rx, ry)


def axis_autocorrelations(
    ura: UraConfig, angles: SpaceAngles, error_model: AngleErrorModel
) -> tuple[np.ndarray, np.ndarray]:
    """Both axis factors (R_x, R_y) of the steering autocorrelation."""
    rx = axis_autocorrelation(ura.n_x, ura.phase_step, angles.phi_x, error_model)
    ry = axis_autocorrelation(ura.n_y, ura.phase_step, angles.phi_y, error_model)
    return rx, ry
