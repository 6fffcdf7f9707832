from typing import List, Tuple

import numpy as np

from utils.spectral.francis_qr import eig_general
from utils.spectral.jacobi import canonical_signs, eig_symmetric
from utils.spectral.power_iteration import power_iteration


def top_eigpairs_symmetric(A, n: int, method: str = "jacobi", iters: int = 500, seed: int = 0) -> List[Tuple[float, np.ndarray]]:
    """
    Largest-n eigenpairs of a symmetric (PSD) matrix with orthonormal vectors.

    Args:
        A: Symmetric matrix
        n: Number of pairs (<= dim)
        method: "jacobi" (full decomposition) or "power" (power iteration + deflation)
        iters: Power-iteration budget per pair
        seed: Seed for power-iteration starts

    Returns:
        List of (value, vector), values descending
    """
    A = np.array(A, dtype=float)
    dim = A.shape[0]
    if not 0 <= n <= dim:
        raise ValueError(f"requested {n} eigenpairs of a {dim}x{dim} matrix")
    if method == "jacobi":
        spectrum = eig_symmetric(A)
        return [(float(spectrum.eigenvalues[i]), spectrum.eigenvectors[:, i].copy()) for i in range(n)]
    if method != "power":
        raise ValueError(f"unknown method {method!r}")
    pairs = []
    deflated = A.copy()
    for i in range(n):
        value, vector = power_iteration(lambda v: deflated @ v, dim, iters=iters, seed=seed + i)
        # keep orthogonal to the pairs already found
        for _, previous in pairs:
            vector = vector - (previous @ vector) * previous
        vector = canonical_signs((vector / np.linalg.norm(vector)).reshape(-1, 1))[:, 0]
        pairs.append((value, vector))
        deflated = deflated - value * np.outer(vector, vector)
    return pairs


def spectral_radius(A) -> float:
    """max |lambda| over the general spectrum."""
    spectrum = eig_general(A)
    return float(np.max(spectrum.moduli)) if spectrum.eigenvalues.size else 0.0
