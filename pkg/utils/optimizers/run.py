import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from utils.constants import DIVERGENCE_BOUND
from utils.optimizers.step_operator import StepOperator


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Iterates w_0..w_m of an operator run (m <= k when a guard stops the run early).

    Args:
        iterates: Array of shape (m + 1, n)
        diverged: True if the divergence guard tripped
        reason: Guard that tripped ("norm", "non-finite") or None
    """
    iterates: np.ndarray
    diverged: bool = False
    reason: Optional[str] = None

    @property
    def final(self) -> np.ndarray:
        return self.iterates[-1]

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1


def run(op: StepOperator, w0, k: int, divergence_bound: float = DIVERGENCE_BOUND) -> Trajectory:
    """
    Iterate an operator k times with divergence guards.

    Args:
        op: Fixed-point operator
        w0: Starting point
        k: Number of steps (>= 0)
        divergence_bound: Stop when the parameter norm exceeds this value

    Returns:
        Trajectory; guard outcomes are recorded as data, never raised
    """
    if k < 0:
        raise ValueError(f"number of steps must be non-negative, got {k}")
    w = np.asarray(w0, dtype=float).reshape(-1)
    iterates = [w]
    for j in range(k):
        try:
            w = op.step(w)
        except (ArithmeticError, ValueError) as e:
            logging.debug(f"⚠️ {op.name} step {j} failed: {e}")
            return Trajectory(np.array(iterates), True, "non-finite")
        if not np.all(np.isfinite(w)):
            logging.debug(f"⚠️ {op.name} produced non-finite iterate at step {j + 1}")
            return Trajectory(np.array(iterates), True, "non-finite")
        iterates.append(w)
        if np.linalg.norm(w) > divergence_bound:
            logging.debug(f"⚠️ {op.name} exceeded divergence bound at step {j + 1}")
            return Trajectory(np.array(iterates), True, "norm")
    return Trajectory(np.array(iterates), False, None)
