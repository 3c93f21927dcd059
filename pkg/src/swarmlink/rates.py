"""Capacity benchmark and achievable-rate evaluation.

Capacity assumes full cooperation across satellites (the swarm acts as one
multi-antenna receiver): water-filling over the eigenvalues of H H^H.
The achievable rate of per-satellite decoding is the sum of log2(1 + SINR)
terms under a given precoder.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_WATERFILL_TOL = 1e-12
_RANK_TOL = 1e-12


@dataclass(frozen=True)
class PowerAllocation:
    """Water-filling output: per-eigenmode powers and the water level."""

    powers: np.ndarray
    water_level: float


@dataclass(frozen=True)
class RateReport:
    """Capacity, achievable sum rate and per-satellite SINRs of one channel."""

    capacity: float
    sum_rate: float
    sinrs: np.ndarray

    def __post_init__(self):
        if self.sum_rate > self.capacity + 1e-9:
            raise ValueError(
                "sum rate %.12g exceeds capacity %.12g" % (self.sum_rate, self.capacity)
            )


def waterfill(
    eigenvalues, total_power: float, noise_power: float
) -> PowerAllocation:
    """Water-filling power allocation over parallel eigenmodes.

    Finds the water level mu by bisection so that the powers
    p_k = max(0, mu - noise_power / lambda_k) sum to ``total_power``;
    eigenvalues below 1e-12 times the largest count as zero rank and get
    zero power.

    Parameters
    ----------
    eigenvalues : array_like
        Nonnegative channel eigenvalues; at least one must be positive.
    total_power : float
        Power budget, > 0.
    noise_power : float
        Noise power, > 0.

    Raises
    ------
    ValueError
        If all eigenvalues are zero (or negative) or the scalars are invalid.
    """
    lam = np.atleast_1d(np.asarray(eigenvalues, dtype=float))
    if not (total_power > 0.0 and noise_power > 0.0):
        raise ValueError("total_power and noise_power must be > 0")
    lam = np.clip(lam, 0.0, None)
    peak = lam.max(initial=0.0)
    if peak <= 0.0:
        raise ValueError("need at least one positive eigenvalue")
    active = lam > _RANK_TOL * peak

    inv = noise_power / lam[active]
    lo = inv.min()  # water at the strongest mode: zero total power
    hi = inv.max() + total_power  # floods every active mode past the budget
    target = total_power
    level = hi
    for _ in range(200):
        level = 0.5 * (lo + hi)
        total = np.clip(level - inv, 0.0, None).sum()
        if abs(total - target) <= _WATERFILL_TOL * target:
            break
        if total > target:
            hi = level
        else:
            lo = level

    powers = np.zeros_like(lam)
    powers[active] = np.clip(level - inv, 0.0, None)
    return PowerAllocation(powers=powers, water_level=float(level))


def capacity(channel: np.ndarray, total_power: float, noise_power: float) -> float:
    """Channel capacity in bits per channel use.

    Water-fills ``total_power`` over the eigenvalues of channel @ channel^H.
    """
    h = np.atleast_2d(np.asarray(channel, dtype=complex))
    if not np.any(h):
        raise ValueError("channel matrix is zero")
    lam = np.linalg.eigvalsh(h @ h.conj().T)
    lam = np.clip(lam, 0.0, None)
    alloc = waterfill(lam, total_power, noise_power)
    return float(np.sum(np.log2(1.0 + lam * alloc.powers / noise_power)))


def sinr(channel: np.ndarray, precoder: np.ndarray, noise_power: float) -> np.ndarray:
    """Per-satellite SINR under a precoder.

    Gamma_l = |h_l^H g_l|^2 / (sum_{i != l} |h_l^H g_i|^2 + noise_power),
    with channel rows h_l^H and precoder columns g_i.
    """
    h = np.atleast_2d(np.asarray(channel, dtype=complex))
    g = np.atleast_2d(np.asarray(precoder, dtype=complex))
    if h.shape[1] != g.shape[0] or h.shape[0] != g.shape[1]:
        raise ValueError(
            f"dimension mismatch: channel {h.shape} vs precoder {g.shape}"
        )
    cross = np.abs(h @ g) ** 2
    signal = np.diag(cross).copy()
    interference = cross.sum(axis=1) - signal
    return signal / (interference + noise_power)


def sum_rate(sinrs) -> float:
    """Achievable rate sum(log2(1 + Gamma_l)) in bits per channel use."""
    gammas = np.atleast_1d(np.asarray(sinrs, dtype=float))
    if np.any(gammas < 0.0):
        raise ValueError("SINRs must be >= 0")
    return float(np.sum(np.log2(1.0 + gammas)))


def rate_report(
    channel: np.ndarray, precoder: np.ndarray, total_power: float, noise_power: float
) -> RateReport:
    """Capacity, sum rate and SINR breakdown for one channel realization."""
    gammas = sinr(channel, precoder, noise_power)
    return RateReport(
        capacity=capacity(channel, total_power, noise_power),
        sum_rate=sum_rate(gammas),
        sinrs=gammas,
    )
