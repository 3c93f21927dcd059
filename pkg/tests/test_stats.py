import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from swarmlink.channel import UraConfig, perturb_angles, steering_vector
from swarmlink.geometry import SpaceAngles
from swarmlink.stats import (
    GaussianError,
    NoError,
    UniformError,
    axis_autocorrelation,
    axis_autocorrelations,
    cf_gauss,
    cf_uniform,
    steering_autocorrelation,
)

URA4 = UraConfig(n_x=4, n_y=4, antenna_spacing=0.025, carrier_frequency=30e9)


def quad_cf(density, support, t):
    """Characteristic-function oracle: adaptive quadrature of E[exp(j t x)]."""
    re = quad(lambda x: math.cos(t * x) * density(x), *support, limit=400)[0]
    im = quad(lambda x: math.sin(t * x) * density(x), *support, limit=400)[0]
    return re, im


def test_cf_uniform_at_origin_is_exactly_one():
    assert float(cf_uniform(0.0, 0.3)) == 1.0


def test_cf_uniform_first_null():
    assert float(cf_uniform(math.pi / 0.3, 0.3)) == pytest.approx(0.0, abs=1e-15)


def test_cf_uniform_matches_quadrature():
    a = 0.3
    density = lambda x: 1.0 / (2 * a)
    for t in (2.0, 0.7, 15.0, 100.0):
        re, im = quad_cf(density, (-a, a), t)
        assert float(cf_uniform(t, a)) == pytest.approx(re, abs=1e-9)
        assert im == pytest.approx(0.0, abs=1e-9)


def test_cf_gauss_at_origin_and_small_std():
    assert float(cf_gauss(0.0, 0.2)) == 1.0
    assert float(cf_gauss(5.0, 1e-12)) == pytest.approx(1.0, abs=1e-12)


def test_cf_gauss_matches_quadrature():
    s = 0.2
    density = lambda x: math.exp(-0.5 * (x / s) ** 2) / (s * math.sqrt(2 * math.pi))
    for t in (1.5, 0.3, 8.0):
        re, im = quad_cf(density, (-10 * s, 10 * s), t)
        assert float(cf_gauss(t, s)) == pytest.approx(re, abs=1e-9)
        assert im == pytest.approx(0.0, abs=1e-9)


@given(t=st.floats(-500.0, 500.0))
def test_cf_bounds_and_evenness(t):
    for model in (UniformError(0.01), GaussianError(0.02), NoError()):
        value = float(model.cf(t))
        assert abs(value) <= 1.0 + 1e-12
        assert value == pytest.approx(float(model.cf(-t)), abs=1e-15)
        assert float(model.cf(0.0)) == 1.0


def test_error_model_variances():
    assert UniformError(0.3).variance == pytest.approx(0.03, rel=1e-12)
    assert GaussianError(0.2).variance == pytest.approx(0.04)
    assert NoError().variance == 0.0
    matched = GaussianError.matching_uniform(0.3)
    assert matched.variance == pytest.approx(UniformError(0.3).variance, rel=1e-12)


def test_no_error_autocorrelation_is_rank_one_projector():
    phi = SpaceAngles(0.37, -0.21)
    r = steering_autocorrelation(URA4, phi, NoError())
    a = steering_vector(URA4, phi)
    np.testing.assert_allclose(r, np.outer(a, a.conj()), atol=1e-12)
    eigenvalues = np.linalg.eigvalsh(r)
    assert eigenvalues[-1] == pytest.approx(URA4.n_antennas, rel=1e-12)
    assert abs(eigenvalues[-2]) < 1e-9 * URA4.n_antennas


def test_autocorrelation_unit_diagonal_exact():
    for model in (UniformError(0.01), GaussianError(0.02)):
        r = steering_autocorrelation(URA4, SpaceAngles(0.3, 0.4), model)
        assert np.all(np.diag(r) == 1.0 + 0.0j)
        assert np.trace(r).real == URA4.n_antennas


def test_autocorrelation_hermitian_toeplitz_psd():
    rng = np.random.default_rng(6)
    for model in (UniformError(0.02), GaussianError(0.015)):
        phi = SpaceAngles(*rng.uniform(-0.8, 0.8, 2))
        rx, ry = axis_autocorrelations(URA4, phi, model)
        for axis_r in (rx, ry):
            np.testing.assert_allclose(axis_r, axis_r.conj().T, atol=1e-12)
            # Toeplitz: constant along diagonals
            for off in range(1, axis_r.shape[0]):
                diag = np.diagonal(axis_r, offset=off)
                np.testing.assert_allclose(diag, diag[0], atol=1e-14)
        full = steering_autocorrelation(URA4, phi, model)
        np.testing.assert_allclose(full, np.kron(rx, ry), atol=1e-14)
        min_eig = np.linalg.eigvalsh(full).min()
        assert min_eig >= -1e-9 * URA4.n_antennas


def test_monte_carlo_autocorrelation_oracle():
    # sample mean of a(phi_hat) a(phi_hat)^H over perturbed angles
    rng = np.random.default_rng(2024)
    phi = SpaceAngles(0.25, -0.4)
    n_draws = 10**5
    for model in (UniformError(0.02), GaussianError(0.015)):
        r_pred = steering_autocorrelation(URA4, phi, model)
        acc = np.zeros_like(r_pred)
        for _ in range(n_draws):
            est = perturb_angles(rng, phi, model)
            a = steering_vector(URA4, est)
            acc += np.outer(a, a.conj())
        acc /= n_draws
        # prediction centers on the estimate; sampling perturbs around the
        # same point, so compare expectations entrywise
        assert np.max(np.abs(acc - r_pred)) < 1e-2


def test_phase_shift_covariance_spectrum_invariance():
    model = UniformError(0.02)
    r1 = steering_autocorrelation(URA4, SpaceAngles(0.1, -0.3), model)
    r2 = steering_autocorrelation(URA4, SpaceAngles(0.62, 0.2), model)
    w1 = np.linalg.eigvalsh(r1)
    w2 = np.linalg.eigvalsh(r2)
    np.testing.assert_allclose(w1, w2, atol=1e-9 * URA4.n_antennas)


def test_gaussian_spread_shrinks_dominant_eigenvalue():
    ura = UraConfig(8, 8, 0.025, 30e9)
    phi = SpaceAngles(0.33, -0.15)
    spreads = [0.0, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1]
    previous = None
    for spread in spreads:
        model = NoError() if spread == 0.0 else GaussianError(spread)
        top = np.linalg.eigvalsh(steering_autocorrelation(ura, phi, model))[-1]
        if previous is not None:
            assert top <= previous + 1e-9
        previous = top


def test_axis_autocorrelation_matches_elementwise_definition():
    model = GaussianError(0.03)
    step = URA4.phase_step
    phi_hat = 0.41
    r = axis_autocorrelation(4, step, phi_hat, model)
    for m in range(4):
        for mp in range(4):
            expected = np.exp(-1j * step * (m - mp) * phi_hat) * float(
                model.cf(step * (mp - m))
            )
            assert r[m, mp] == pytest.approx(expected, rel=1e-12)


def test_error_model_validation():
    with pytest.raises(ValueError):
        UniformError(0.0)
    with pytest.raises(ValueError):
        GaussianError(-0.1)
    with pytest.raises(ValueError):
        cf_uniform(1.0, -2.0)
    with pytest.raises(ValueError):
        cf_gauss(1.0, 0.0)
