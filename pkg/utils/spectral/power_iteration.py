from typing import Callable, Optional, Tuple

import numpy as np


def power_iteration(
    matvec: Callable[[np.ndarray], np.ndarray],
    dim: int,
    iters: int = 200,
    v0: Optional[np.ndarray] = None,
    seed: int = 0,
    tol: float = 1e-12,
) -> Tuple[float, np.ndarray]:
    """
    Leading eigenpair of a symmetric PSD operator given only matrix-vector products.

    Args:
        matvec: v -> A v
        dim: Dimension of v
        iters: Maximum iterations
        v0: Starting vector (seeded random when None)
        seed: Seed for the random start
        tol: Stop when successive Rayleigh quotients agree to this relative tolerance

    Returns:
        (eigenvalue, unit eigenvector)
    """
    v = np.random.default_rng(seed).normal(size=dim) if v0 is None else np.array(v0, dtype=float)
    v /= np.linalg.norm(v)
    value = 0.0
    for _ in range(max(iters, 1)):
        u = matvec(v)
        norm_u = np.linalg.norm(u)
        if norm_u == 0.0:
            return 0.0, v
        new_value = float(v @ u)
        v = u / norm_u
        if abs(new_value - value) <= tol * max(abs(new_value), 1.0):
            value = new_value
            break
        value = new_value
    return float(v @ matvec(v)), v / np.linalg.norm(v)
