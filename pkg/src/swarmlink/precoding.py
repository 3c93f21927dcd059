"""Per-satellite transmit precoders for the multi-satellite uplink.

Three designs, all with equal per-stream power total_power / n_satellites:

* robust: maximizes the expected signal-to-leakage-and-noise ratio (SLNR)
  given only steering-vector correlation matrices; the optimizer of the
  resulting generalized Rayleigh quotient is the principal generalized
  eigenvector of (signal correlation, leakage-plus-noise correlation).
* perfect CSI: closed form for exactly known steering vectors.
* heuristic: the perfect-CSI formula evaluated at estimated steering
  vectors, leakage sum only.

Generalized eigenpairs are computed by Cholesky reduction to a standard
Hermitian problem; matrices are never inverted explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from . import linalg
from .linalg import NumericalError


@dataclass(frozen=True)
class SlnrProblem:
    """Statistical inputs of the mean-SLNR precoder design.

    Parameters
    ----------
    correlations : numpy.ndarray
        Per-satellite steering autocorrelation matrices, shape
        (n_satellites, n, n), each Hermitian PSD with unit diagonal.
    gain_variances : numpy.ndarray
        Mean channel power gains sigma_alpha^2, all > 0.
    noise_power : float
        Receiver noise power in W, > 0.
    total_power : float
        Transmit power budget in W, > 0.
    """

    correlations: np.ndarray
    gain_variances: np.ndarray
    noise_power: float
    total_power: float

    def __post_init__(self):
        corr = np.asarray(self.correlations, dtype=complex)
        gains = np.atleast_1d(np.asarray(self.gain_variances, dtype=float))
        if corr.ndim != 3 or corr.shape[1] != corr.shape[2]:
            raise ValueError(f"correlations must be (n_sat, n, n), got {corr.shape}")
        if gains.shape != (corr.shape[0],):
            raise ValueError("need one gain variance per satellite")
        if np.any(gains <= 0.0):
            raise ValueError("gain variances must be > 0")
        if not (self.noise_power > 0.0 and self.total_power > 0.0):
            raise ValueError("noise_power and total_power must be > 0")
        hermit_gap = np.max(np.abs(corr - corr.conj().transpose(0, 2, 1)))
        if hermit_gap > 1e-10 * max(np.max(np.abs(corr)), 1.0):
            raise ValueError("correlation matrices must be Hermitian")
        object.__setattr__(self, "correlations", corr)
        object.__setattr__(self, "gain_variances", gains)

    @property
    def n_satellites(self) -> int:
        return self.correlations.shape[0]

    @property
    def n_antennas(self) -> int:
        return self.correlations.shape[1]

    @property
    def noise_loading(self) -> float:
        """Diagonal loading n_satellites * noise_power / total_power."""
        return self.n_satellites * self.noise_power / self.total_power

    def leakage_matrix(self, sat: int) -> np.ndarray:
        """Sum of weighted interference correlations plus noise loading."""
        others = [
            self.gain_variances[i] * self.correlations[i]
            for i in range(self.n_satellites)
            if i != sat
        ]
        b = sum(others) if others else np.zeros_like(self.correlations[0])
        return b + self.noise_loading * np.eye(self.n_antennas)


def mean_slnr(weights: np.ndarray, problem: SlnrProblem, sat: int) -> float:
    """Expected SLNR of satellite ``sat`` under precoding vector ``weights``.

    Ratio of the expected beamformed signal power at the target satellite
    to the expected power leaked to the others plus scaled noise; the
    stream power is taken as weights^H weights.
    """
    g = np.asarray(weights, dtype=complex).ravel()
    p = float(np.real(np.vdot(g, g)))
    if p <= 0.0:
        raise ValueError("precoding vector must be nonzero")
    num = problem.gain_variances[sat] * np.real(
        np.vdot(g, problem.correlations[sat] @ g)
    )
    den = problem.noise_power  # g^H (noise/p) I g = noise
    for i in range(problem.n_satellites):
        if i != sat:
            den += problem.gain_variances[i] * np.real(
                np.vdot(g, problem.correlations[i] @ g)
            )
    return float(num / den)


def principal_generalized_eigenpair(
    a: np.ndarray, b: np.ndarray
) -> tuple[float, np.ndarray]:
    """Largest eigenpair of the pencil (a, b), a Hermitian PSD, b Hermitian PD.

    Reduces via b = L L^H to the standard Hermitian problem
    L^-1 a L^-H and maps the eigenvector back, so the result satisfies
    a v = lambda_max b v with v of unit norm.

    Returns
    -------
    (float, numpy.ndarray)
        Largest eigenvalue and its unit-norm eigenvector (phase not fixed).
    """
    a = np.asarray(a)
    l = linalg.cholesky(b)
    y = scipy.linalg.solve_triangular(l, a, lower=True)
    c = scipy.linalg.solve_triangular(l, y.conj().T, lower=True)
    c = 0.5 * (c + c.conj().T)  # kill rounding skew before eigh
    eigenvalues, eigenvectors = linalg.hermitian_eig(c)
    lam = float(eigenvalues[-1])
    v = scipy.linalg.solve_triangular(l, eigenvectors[:, -1], lower=True, trans="C")
    return lam, v / np.linalg.norm(v)


def robust_precoder(problem: SlnrProblem) -> np.ndarray:
    """Mean-SLNR-optimal precoder from correlation matrices.

    Column l is the principal generalized eigenvector of the pencil
    (gain_variances[l] * correlations[l], leakage_matrix(l)), scaled to
    norm sqrt(total_power / n_satellites) with the first significant entry
    rotated real positive.

    Returns
    -------
    numpy.ndarray
        n_antennas-by-n_satellites precoding matrix.

    Raises
    ------
    NumericalError
        On eigensolver failure; the message names the satellite index.
    """
    columns = []
    scale = math.sqrt(problem.total_power / problem.n_satellites)
    for sat in range(problem.n_satellites):
        a = problem.gain_variances[sat] * problem.correlations[sat]
        b = problem.leakage_matrix(sat)
        try:
            _, v = principal_generalized_eigenpair(a, b)
        except (np.linalg.LinAlgError, NumericalError) as exc:
            raise NumericalError(
                f"robust precoder failed for satellite {sat}: {exc}"
            ) from exc
        columns.append(scale * linalg.fix_phase(v))
    return np.column_stack(columns)


def _as_steering_matrix(steering: Sequence[np.ndarray] | np.ndarray) -> np.ndarray:
    mat = np.asarray(steering, dtype=complex)
    if mat.ndim == 2 and isinstance(steering, np.ndarray):
        return mat  # already columns
    return np.column_stack([np.ravel(s) for s in steering])


def _loaded_inverse_apply(
    columns: np.ndarray, weights: np.ndarray, loading: float, rhs: np.ndarray
) -> np.ndarray:
    """Solve (loading * I + columns @ diag(weights) @ columns^H) x = rhs.

    Uses the matrix inversion lemma on the low-rank-plus-identity
    structure, exact for any number of columns.
    """
    if columns.shape[1] == 0:
        return rhs / loading
    u = columns * np.sqrt(weights)
    cap = loading * np.eye(u.shape[1]) + u.conj().T @ u
    z = np.linalg.solve(cap, u.conj().T @ rhs)
    return (rhs - u @ z) / loading


def _normalized_columns(raw: np.ndarray, total_power: float) -> np.ndarray:
    n_streams = raw.shape[1]
    scale = math.sqrt(total_power / n_streams)
    cols = []
    for k in range(n_streams):
        col = raw[:, k]
        norm = np.linalg.norm(col)
        if norm == 0.0:
            raise NumericalError(f"precoder column {k} collapsed to zero")
        cols.append(scale * linalg.fix_phase(col / norm))
    return np.column_stack(cols)


def perfect_csi_precoder(
    steering: Sequence[np.ndarray] | np.ndarray,
    gain_variances: np.ndarray,
    noise_power: float,
    total_power: float,
) -> np.ndarray:
    """Optimal precoder for exactly known steering vectors.

    Column l is proportional to
    (sum_i sigma_i^2 a_i a_i^H + loading * I)^-1 a_l with loading
    n_satellites * noise_power / total_power, normalized to per-column
    power total_power / n_satellites.
    """
    a = _as_steering_matrix(steering)
    gains = np.atleast_1d(np.asarray(gain_variances, dtype=float))
    n_sat = a.shape[1]
    loading = n_sat * noise_power / total_power
    raw = _loaded_inverse_apply(a, gains, loading, a)
    return _normalized_columns(raw, total_power)


def heuristic_precoder(
    steering: Sequence[np.ndarray] | np.ndarray,
    gain_variances: np.ndarray,
    noise_power: float,
    total_power: float,
) -> np.ndarray:
    """Perfect-CSI formula evaluated at estimated steering vectors.

    The regularized system for column l sums leakage terms over i != l
    only; each column is normalized to power total_power / n_satellites.
    """
    a = _as_steering_matrix(steering)
    gains = np.atleast_1d(np.asarray(gain_variances, dtype=float))
    n_sat = a.shape[1]
    loading = n_sat * noise_power / total_power
    raw = np.empty_like(a)
    for sat in range(n_sat):
        others = [i for i in range(n_sat) if i != sat]
        raw[:, sat] = _loaded_inverse_apply(
            a[:, others], gains[others], loading, a[:, sat]
        )
    return _normalized_columns(raw, total_power)


def _kron_factor(
    rx: np.ndarray, ry: np.ndarray, rank_tol: float
) -> np.ndarray:
    """Low-rank factor W with W @ W^H ~= kron(rx, ry) for PSD Toeplitz factors."""
    wx, vx = linalg.hermitian_eig(rx)
    wy, vy = linalg.hermitian_eig(ry)
    wx = np.clip(wx, 0.0, None)
    wy = np.clip(wy, 0.0, None)
    products = np.outer(wx, wy)
    keep = np.argwhere(products > rank_tol * products.max())
    ix, iy = keep[:, 0], keep[:, 1]
    scale = np.sqrt(products[ix, iy])
    n_x, n_y = rx.shape[0], ry.shape[0]
    cols = vx[:, ix].reshape(n_x, 1, -1) * vy[:, iy].reshape(1, n_y, -1)
    return cols.reshape(n_x * n_y, -1) * scale


def robust_precoder_kron(
    axis_correlations: Sequence[tuple[np.ndarray, np.ndarray]],
    gain_variances: np.ndarray,
    noise_power: float,
    total_power: float,
    rank_tol: float = 1e-12,
) -> np.ndarray:
    """Robust precoder exploiting the Kronecker structure of correlations.

    Equivalent to building dense kron(R_x, R_y) matrices and calling
    :func:`robust_precoder`, but works on low-rank factors of each
    satellite's correlation, so large arrays stay cheap.  Eigenvalue
    products below rank_tol times the largest are truncated.

    Per satellite, the leakage matrix is loading*I + U U^H with a low-rank
    U, so its inverse applications reduce to the factors' cross-Gram
    blocks (computed once) and the principal generalized eigenpair lives
    in the column space of the satellite's own factor.

    Parameters
    ----------
    axis_correlations : sequence of (R_x, R_y) pairs
        Per-satellite axis factors, e.g. from
        :func:`swarmlink.stats.axis_autocorrelations`.
    """
    gains = np.atleast_1d(np.asarray(gain_variances, dtype=float))
    n_sat = len(axis_correlations)
    if gains.shape != (n_sat,):
        raise ValueError("need one gain variance per satellite")
    loading = n_sat * noise_power / total_power
    factors = [
        math.sqrt(gains[i]) * _kron_factor(rx, ry, rank_tol)
        for i, (rx, ry) in enumerate(axis_correlations)
    ]
    grams = [[None] * n_sat for _ in range(n_sat)]
    for i in range(n_sat):
        for j in range(i, n_sat):
            grams[i][j] = factors[i].conj().T @ factors[j]
            if j > i:
                grams[j][i] = grams[i][j].conj().T
    scale = math.sqrt(total_power / n_sat)

    columns = []
    for sat in range(n_sat):
        others = [i for i in range(n_sat) if i != sat]
        w = factors[sat]
        if others:
            # capacitance of B = loading*I + U U^H, U = [factors[i]]_{i != sat}
            cap = np.block([[grams[i][j] for j in others] for i in others])
            cap += loading * np.eye(cap.shape[0])
            cross = np.vstack([grams[i][sat] for i in others])  # U^H w
            z = np.linalg.solve(cap, cross)
            m = (grams[sat][sat] - cross.conj().T @ z) / loading
        else:
            z = None
            m = grams[sat][sat] / loading
        m = 0.5 * (m + m.conj().T)
        try:
            _, vecs = linalg.hermitian_eig(m)
        except NumericalError as exc:
            raise NumericalError(
                f"robust precoder failed for satellite {sat}: {exc}"
            ) from exc
        top = vecs[:, -1]
        # v = B^-1 w top, expanded through the inversion lemma
        v = w @ top
        if others:
            u_coeff = z @ top
            offset = 0
            for i in others:
                r = factors[i].shape[1]
                v -= factors[i] @ u_coeff[offset : offset + r]
                offset += r
        norm = np.linalg.norm(v)
        if norm == 0.0:
            raise NumericalError(f"robust precoder collapsed for satellite {sat}")
        columns.append(scale * linalg.fix_phase(v / norm))
    return np.column_stack(columns)
