import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from utils.autodiff.derivatives import joint_gradient
from utils.grr.tree import BranchStatus
from utils.optimizers.run import Trajectory
from utils.optimizers.step_operator import StepOperator
from utils.spectral.francis_qr import eig_general

# Oscillations smaller than this, relative to the iterate scale, count as a stall.
CYCLE_MIN_AMPLITUDE = 1e-6


@dataclass(frozen=True, eq=False)
class SolutionVerdict:
    status: BranchStatus
    grad_norm: float = math.inf
    spectral_radius: float = math.inf
    eigenvalues: Optional[np.ndarray] = None
    residual: float = math.inf

    @property
    def is_solution(self) -> bool:
        return self.status is BranchStatus.SOLUTION


def fixed_point_residual(op: StepOperator, w) -> float:
    """||F(w) - w|| / alpha: the joint gradient norm for SimSGD, the LOLA direction norm for LOLA."""
    w = np.asarray(w, dtype=float).reshape(-1)
    return float(np.linalg.norm(op.step(w) - w)) / op.alpha


def _looks_cyclic(op: StepOperator, trajectory: Trajectory, window: int, tol: float) -> bool:
    """Bounded oscillation of visible amplitude over the trailing window without the residual shrinking."""
    if window < 2 or trajectory.steps < window:
        return False
    tail = trajectory.iterates[-window:]
    if not np.all(np.isfinite(tail)):
        return False
    scale = 1.0 + float(np.max(np.abs(tail)))
    spread = float(np.max(np.linalg.norm(tail - tail.mean(axis=0), axis=1)))
    last_move = float(np.max(np.linalg.norm(np.diff(tail[-3:], axis=0), axis=1)))
    if spread <= CYCLE_MIN_AMPLITUDE * scale or last_move <= CYCLE_MIN_AMPLITUDE * scale:
        return False
    r_first = fixed_point_residual(op, tail[0])
    r_last = fixed_point_residual(op, tail[-1])
    if r_last <= tol or r_last < 0.9 * r_first:
        return False
    # the iterate keeps returning near where the window started
    closest_return = float(np.min(np.linalg.norm(tail[window // 2:] - tail[0], axis=1)))
    return closest_return < 0.5 * spread


def verify_solution(
    game,
    op: StepOperator,
    w,
    grad_tol: float = 1e-3,
    stability_tol: float = 1e-3,
    trajectory: Optional[Trajectory] = None,
    cycle_window: int = 50,
) -> SolutionVerdict:
    """
    Classify an optimized point.

    Solution iff the fixed-point residual ||F(w) - w|| / alpha <= grad_tol and
    max |lambda(J(w))| <= 1 + stability_tol. Under SimSGD the residual is ||g(w)||;
    under LOLA it is the norm of the shaped direction, which vanishes at LOLA's own
    fixed points even where g does not. grad_norm is reported alongside.
    Diverged when the trajectory guard tripped or the point is not finite.
    CycleSuspected when the trailing trajectory window oscillates without progress.
    Otherwise Optimized.
    """
    w = np.asarray(w, dtype=float).reshape(-1)
    if (trajectory is not None and trajectory.diverged) or not np.all(np.isfinite(w)):
        return SolutionVerdict(BranchStatus.DIVERGED)
    try:
        grad_norm = float(np.linalg.norm(joint_gradient(game, w)))
        residual = fixed_point_residual(op, w)
        eigenvalues = eig_general(op.jac(w)).eigenvalues
    except ArithmeticError as e:
        logging.debug(f"⚠️ verification failed at {w.tolist()}: {e}")
        return SolutionVerdict(BranchStatus.DIVERGED)
    radius = float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0
    if residual <= grad_tol and radius <= 1.0 + stability_tol:
        status = BranchStatus.SOLUTION
    elif trajectory is not None and _looks_cyclic(op, trajectory, cycle_window, grad_tol):
        status = BranchStatus.CYCLE_SUSPECTED
    else:
        status = BranchStatus.OPTIMIZED
    return SolutionVerdict(status, grad_norm, radius, eigenvalues, residual)
