"""Dense Hermitian linear-algebra kernels shared across the library.

Thin contracts over LAPACK: explicit Hermiticity checks, a positive-
definiteness error that reports the failing pivot, and a deterministic
eigenvector phase convention.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import lapack


class NumericalError(RuntimeError):
    """A numerical kernel failed to converge or produce a valid result."""


class NotPositiveDefiniteError(np.linalg.LinAlgError):
    """Cholesky factorization hit a non-positive pivot.

    Attributes
    ----------
    pivot : int
        Zero-based index of the first failing pivot.
    """

    def __init__(self, pivot: int):
        self.pivot = pivot
        super().__init__(f"matrix is not positive definite (first failing pivot {pivot})")


def _require_hermitian(a: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = np.linalg.norm(a)
    if np.linalg.norm(a - a.conj().T) > tol * max(scale, 1.0):
        raise ValueError("matrix is not Hermitian within tolerance")
    return a


def cholesky(b: np.ndarray) -> np.ndarray:
    """Lower-triangular L with L @ L^H = b for Hermitian positive definite b.

    Raises
    ------
    NotPositiveDefiniteError
        If a pivot fails; the zero-based index of the first failing pivot
        is attached to the exception.
    """
    b = _require_hermitian(b)
    if np.iscomplexobj(b):
        l, info = lapack.zpotrf(b, lower=1, clean=1, overwrite_a=0)
    else:
        l, info = lapack.dpotrf(b, lower=1, clean=1, overwrite_a=0)
    if info > 0:
        raise NotPositiveDefiniteError(pivot=info - 1)
    if info < 0:
        raise NumericalError(f"illegal argument {-info} in Cholesky factorization")
    return l


def hermitian_eig(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of Hermitian a."""
    a = _require_hermitian(a)
    try:
        return np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"Hermitian eigendecomposition failed: {exc}") from exc


def kronecker(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with block structure [a_ij * b]."""
    return np.kron(np.asarray(a), np.asarray(b))


def fix_phase(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate a vector so its first entry with magnitude > tol is real positive.

    Returns an unchanged copy when every entry is below the threshold.
    Shared convention making eigenvector-based results deterministic.
    """
    v = np.asarray(v)
    for entry in v:
        m = abs(entry)
        if m > tol:
            return v * (np.conj(entry) / m)
    return v.copy()
