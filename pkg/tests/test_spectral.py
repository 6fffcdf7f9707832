import numpy as np
import pytest

from utils.errors import ConfigError, NumericalError
from utils.spectral import (
    SpectrumKind,
    eig_general,
    eig_symmetric,
    hessenberg,
    power_iteration,
    sort_general,
    spectral_radius,
    top_eigpairs_symmetric,
)


def _random_symmetric(n, seed):
    a = np.random.default_rng(seed).normal(size=(n, n))
    return a + a.T


def test_jacobi_matches_reference():
    A = _random_symmetric(5, 0)
    spectrum = eig_symmetric(A)
    assert spectrum.kind is SpectrumKind.SYMMETRIC
    np.testing.assert_allclose(spectrum.eigenvalues, np.sort(np.linalg.eigvalsh(A))[::-1], atol=1e-10)
    V = spectrum.eigenvectors
    np.testing.assert_allclose(V.T @ V, np.eye(5), atol=1e-10)
    np.testing.assert_allclose(A @ V, V * spectrum.eigenvalues, atol=1e-9)


def test_jacobi_sign_convention():
    V = eig_symmetric(_random_symmetric(4, 1)).eigenvectors
    for j in range(4):
        assert V[np.argmax(np.abs(V[:, j])), j] > 0


def test_jacobi_rejects_asymmetric():
    with pytest.raises(ConfigError):
        eig_symmetric([[1.0, 2.0], [0.0, 1.0]])


def test_qr_rotation_pair_order():
    values = eig_general([[0.0, -1.0], [1.0, 0.0]]).eigenvalues
    np.testing.assert_allclose(values, [1j, -1j], atol=1e-15)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_qr_matches_reference(seed):
    A = np.random.default_rng(seed).normal(size=(6, 6))
    ours = eig_general(A).eigenvalues
    np.testing.assert_allclose(np.sort_complex(ours), np.sort_complex(np.linalg.eigvals(A)), atol=1e-8)
    np.testing.assert_array_equal(np.abs(ours), np.sort(np.abs(ours))[::-1])


def _characteristic_polynomial(A):
    # Faddeev-LeVerrier: coefficients from traces, no eigensolver involved
    n = len(A)
    coeffs = [1.0]
    M = np.zeros_like(A)
    for k in range(1, n + 1):
        M = A @ M + coeffs[-1] * np.eye(n)
        coeffs.append(-np.trace(A @ M) / k)
    return np.array(coeffs)


def test_qr_matches_characteristic_polynomial_roots():
    rng = np.random.default_rng(7)
    for _ in range(50):
        A = rng.normal(size=(4, 4))
        ours = list(eig_general(A).eigenvalues)
        for root in np.roots(_characteristic_polynomial(A)):
            nearest = min(range(len(ours)), key=lambda i: abs(ours[i] - root))
            assert abs(ours.pop(nearest) - root) < 1e-6


def test_symmetric_spectra_are_recovered():
    rng = np.random.default_rng(8)
    for _ in range(200):
        n = int(rng.integers(2, 7))
        Q, _ = np.linalg.qr(rng.normal(size=(n, n)))
        spectrum = np.sort(rng.uniform(-5.0, 5.0, n))[::-1]
        A = (Q * spectrum) @ Q.T
        values = eig_symmetric(0.5 * (A + A.T)).eigenvalues
        np.testing.assert_allclose(values, spectrum, atol=1e-9)


def test_qr_triangular_and_repeated():
    np.testing.assert_allclose(eig_general(np.eye(3)).eigenvalues, [1, 1, 1])
    upper = np.array([[3.0, 1.0, 2.0], [0.0, -5.0, 4.0], [0.0, 0.0, 1.0]])
    np.testing.assert_allclose(eig_general(upper).eigenvalues, [-5, 3, 1])


def test_qr_input_validation():
    with pytest.raises(ConfigError):
        eig_general([[1.0, 2.0, 3.0]])
    with pytest.raises(ConfigError):
        eig_general([[np.inf, 0.0], [0.0, 1.0]])
    assert eig_general(np.zeros((0, 0))).eigenvalues.size == 0


def test_qr_iteration_budget(mocker):
    mocker.patch("utils.spectral.francis_qr.QR_ITERATIONS_PER_DIM2", 0)
    with pytest.raises(NumericalError) as info:
        eig_general(np.random.default_rng(4).normal(size=(4, 4)))
    assert info.value.partial is not None


def test_hessenberg_form():
    A = np.random.default_rng(5).normal(size=(5, 5))
    H = hessenberg(A)
    np.testing.assert_allclose(np.tril(H, -2), 0.0, atol=1e-12)
    np.testing.assert_allclose(np.sort_complex(np.linalg.eigvals(H)), np.sort_complex(np.linalg.eigvals(A)), atol=1e-9)


def test_sort_general_puts_positive_imaginary_first():
    np.testing.assert_array_equal(sort_general([1 - 2j, 0.5, 1 + 2j]), [1 + 2j, 1 - 2j, 0.5])


def test_power_iteration_leading_pair():
    value, vector = power_iteration(lambda v: np.diag([3.0, 1.0]) @ v, 2)
    assert value == pytest.approx(3.0)
    assert abs(vector[0]) == pytest.approx(1.0, abs=1e-6)


def test_power_and_jacobi_top_pairs_agree():
    Q, _ = np.linalg.qr(np.random.default_rng(6).normal(size=(3, 3)))
    A = Q @ np.diag([5.0, 2.0, 1.0]) @ Q.T
    dense = top_eigpairs_symmetric(A, 2)
    power = top_eigpairs_symmetric(A, 2, method="power")
    for (v1, d1), (v2, d2) in zip(dense, power):
        assert v1 == pytest.approx(v2, abs=1e-8)
        assert min(np.linalg.norm(d1 - d2), np.linalg.norm(d1 + d2)) < 1e-4


def test_top_pairs_validation():
    with pytest.raises(ValueError):
        top_eigpairs_symmetric(np.eye(2), 3)
    with pytest.raises(ValueError):
        top_eigpairs_symmetric(np.eye(2), 1, method="lanczos")


def test_spectral_radius():
    assert spectral_radius([[0.0, 2.0], [-2.0, 0.0]]) == pytest.approx(2.0)
