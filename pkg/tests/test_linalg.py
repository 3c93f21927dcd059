import numpy as np
import pytest

from swarmlink.linalg import (
    NotPositiveDefiniteError,
    cholesky,
    fix_phase,
    hermitian_eig,
    kronecker,
)


def random_hpd(rng, n, jitter=0.5):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return m @ m.conj().T + jitter * np.eye(n)


def test_cholesky_identity():
    np.testing.assert_allclose(cholesky(np.eye(4)), np.eye(4), atol=0)


def test_cholesky_diagonal():
    np.testing.assert_allclose(
        cholesky(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-15
    )


def test_cholesky_reconstructs_random_hpd():
    rng = np.random.default_rng(0)
    b = random_hpd(rng, 16)
    l = cholesky(b)
    residual = np.linalg.norm(l @ l.conj().T - b) / np.linalg.norm(b)
    assert residual <= 1e-10
    assert np.allclose(np.triu(l, 1), 0.0)


def test_cholesky_reports_failing_pivot():
    with pytest.raises(NotPositiveDefiniteError) as info:
        cholesky(np.diag([1.0, -1.0]))
    assert info.value.pivot == 1
    # positive leading 2x2 block, failure at the third pivot
    m = np.diag([2.0, 3.0, 1.0])
    m[2, 2] = -0.5
    with pytest.raises(NotPositiveDefiniteError) as info:
        cholesky(m)
    assert info.value.pivot == 2


def test_cholesky_rejects_non_hermitian():
    with pytest.raises(ValueError):
        cholesky(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_hermitian_eig_diagonal_sorted():
    w, v = hermitian_eig(np.diag([3.0, -1.0, 2.0]))
    np.testing.assert_allclose(w, [-1.0, 2.0, 3.0], atol=0)
    np.testing.assert_allclose(np.abs(v), np.eye(3)[:, [1, 2, 0]], atol=1e-14)


def test_hermitian_eig_rank_one_projector():
    rng = np.random.default_rng(1)
    a = rng.normal(size=5) + 1j * rng.normal(size=5)
    a /= np.linalg.norm(a)
    w, _ = hermitian_eig(np.outer(a, a.conj()))
    np.testing.assert_allclose(w[:-1], 0.0, atol=1e-12)
    assert w[-1] == pytest.approx(1.0, rel=1e-12)


def test_hermitian_eig_contracts():
    rng = np.random.default_rng(2)
    m = rng.normal(size=(32, 32)) + 1j * rng.normal(size=(32, 32))
    a = 0.5 * (m + m.conj().T)
    w, v = hermitian_eig(a)
    assert np.trace(a).real == pytest.approx(w.sum(), abs=1e-10 * np.abs(w).max())
    np.testing.assert_allclose(v.conj().T @ v, np.eye(32), atol=1e-10)
    scale = np.linalg.norm(a)
    assert np.linalg.norm(a @ v - v * w) <= 1e-9 * scale


def test_gram_eigenvalues_nonnegative():
    rng = np.random.default_rng(3)
    h = rng.normal(size=(3, 12)) + 1j * rng.normal(size=(3, 12))
    w, _ = hermitian_eig(h @ h.conj().T)
    assert w.min() >= -1e-12 * w.max()


def test_kronecker_identities():
    np.testing.assert_allclose(kronecker(np.eye(2), np.eye(3)), np.eye(6), atol=0)
    rng = np.random.default_rng(4)
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    np.testing.assert_allclose(
        kronecker(a, b).conj().T, kronecker(a.conj().T, b.conj().T), atol=1e-14
    )
    c = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    d = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    np.testing.assert_allclose(
        kronecker(a, b) @ kronecker(c, d), kronecker(a @ c, b @ d), atol=1e-10
    )


def test_kronecker_spectrum_is_pairwise_products():
    rng = np.random.default_rng(5)
    a = random_hpd(rng, 3)
    b = random_hpd(rng, 3)
    wa = np.linalg.eigvalsh(a)
    wb = np.linalg.eigvalsh(b)
    products = np.sort(np.outer(wa, wb).ravel())
    wk = np.linalg.eigvalsh(kronecker(a, b))
    np.testing.assert_allclose(wk, products, rtol=1e-10)


def test_fix_phase_convention():
    v = np.array([0.0, -1j, 2.0])
    fixed = fix_phase(v)
    assert fixed[1].real == pytest.approx(1.0)
    assert abs(fixed[1].imag) < 1e-15
    np.testing.assert_allclose(np.abs(fixed), np.abs(v), atol=1e-15)
    tiny = np.full(3, 1e-15 + 0j)
    np.testing.assert_allclose(fix_phase(tiny), tiny, atol=0)


def test_kernels_are_deterministic():
    rng = np.random.default_rng(6)
    b = random_hpd(rng, 8)
    assert np.array_equal(cholesky(b), cholesky(b))
    w1, v1 = hermitian_eig(b)
    w2, v2 = hermitian_eig(b)
    assert np.array_equal(w1, w2) and np.array_equal(v1, v2)
