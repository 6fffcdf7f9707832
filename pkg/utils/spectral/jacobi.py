import logging

import numpy as np

from utils.constants import JACOBI_MAX_SWEEPS
from utils.errors import ConfigError, NumericalError
from utils.spectral.spectrum import Spectrum, SpectrumKind


def _check_symmetric(A: np.ndarray, rtol: float = 1e-9) -> None:
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ConfigError(f"expected a square matrix, got shape {A.shape}")
    scale = np.linalg.norm(A) or 1.0
    if np.linalg.norm(A - A.T) > rtol * scale:
        raise ConfigError("eig_symmetric requires a symmetric matrix")


def canonical_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip each column so its largest-magnitude entry is positive."""
    for j in range(vectors.shape[1]):
        i = int(np.argmax(np.abs(vectors[:, j])))
        if vectors[i, j] < 0:
            vectors[:, j] = -vectors[:, j]
    return vectors


def eig_symmetric(A, max_sweeps: int = JACOBI_MAX_SWEEPS) -> Spectrum:
    """
    Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Args:
        A: Symmetric matrix
        max_sweeps: Upper bound on full sweeps over the off-diagonal

    Returns:
        Spectrum with eigenvalues sorted descending and orthonormal eigenvector columns
    """
    A = np.array(A, dtype=float)
    _check_symmetric(A)
    a = 0.5 * (A + A.T)
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    for sweep in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= 1e-15 * scale or off == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta != 0.0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise NumericalError(f"Jacobi did not converge in {max_sweeps} sweeps", partial=np.diag(a).copy())
    logging.debug(f"🔍 Jacobi converged after {sweep} sweeps (n={n})")
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return Spectrum(values[order], SpectrumKind.SYMMETRIC, canonical_signs(v[:, order]))
