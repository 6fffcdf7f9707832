from typing import Callable, Sequence

import numpy as np

from utils.constants import FD_STEP_GRADIENT, FD_STEP_OPERATOR_JAC


def fd_gradient(f: Callable[[np.ndarray], float], x: Sequence[float], h: float = FD_STEP_GRADIENT) -> np.ndarray:
    """
    Central-difference gradient.

    Args:
        f: Scalar function of a float vector
        x: Evaluation point
        h: Step size (> 0)

    Returns:
        Gradient estimate
    """
    if h <= 0:
        raise ValueError(f"finite-difference step must be positive, got {h}")
    x = np.asarray(x, dtype=float)
    g = np.empty_like(x)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = h
        g[i] = (f(x + e) - f(x - e)) / (2.0 * h)
    return g


def fd_jacobian(F: Callable[[np.ndarray], np.ndarray], x: Sequence[float], h: float = FD_STEP_OPERATOR_JAC) -> np.ndarray:
    """Central-difference Jacobian, one column per coordinate."""
    if h <= 0:
        raise ValueError(f"finite-difference step must be positive, got {h}")
    x = np.asarray(x, dtype=float)
    columns = []
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = h
        columns.append((np.asarray(F(x + e)) - np.asarray(F(x - e))) / (2.0 * h))
    return np.column_stack(columns) if columns else np.zeros((0, 0))
