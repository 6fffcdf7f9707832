"""
Truncated (k-step) Lyapunov exponents of optimizer trajectories.

The k-step exponent along a unit direction d is the average of the Lyapunov terms
gamma_j = log(d^T (J^j)^T J^j d) over j = 0..k, normalized by k + 1 (nats per step,
squared-stretch convention). The maximal exponent uses the averaged matrix
J_dagger = (1 / (k + 1)) * sum_j (J^j)^T J^j.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from utils.constants import DIVERGENCE_BOUND
from utils.lyapunov.directions import (
    DEFAULT_STRATEGY,
    DirectionKind,
    DirectionStrategy,
    random_direction,
    top_stretch_direction,
    unit,
)
from utils.optimizers.run import Trajectory, run
from utils.optimizers.step_operator import StepOperator
from utils.spectral.queries import top_eigpairs_symmetric


@dataclass(frozen=True, eq=False)
class LyapunovReport:
    """
    Args:
        exponent: Mean of the finite Lyapunov terms (nats per step)
        terms: gamma_0..gamma_m (may contain -inf)
        direction_used: Final unit direction
        trajectory: The iterates the terms were taken along
        diverged: True when the trajectory guard tripped before k steps
        j_dagger: Averaged J^T J (max-exponent reports only)
        proxy: log of the top eigenvalue of j_dagger (max-exponent reports only)
        degenerate_terms: Number of -inf terms excluded from the mean
    """
    exponent: float
    terms: np.ndarray
    direction_used: np.ndarray
    trajectory: Trajectory
    diverged: bool
    j_dagger: Optional[np.ndarray] = None
    proxy: Optional[float] = None
    degenerate_terms: int = 0

    @property
    def proxy_gap(self) -> Optional[float]:
        """proxy - exponent; non-negative by Jensen's inequality along the fixed direction."""
        return None if self.proxy is None else self.proxy - self.exponent


def lyap_term(op: StepOperator, w, d) -> float:
    """gamma = log(d^T J^T J d) = 2 log ||J d||; -inf when J d vanishes."""
    return _term(op.jac(w), np.asarray(d, dtype=float))


def _term(J: np.ndarray, d: np.ndarray) -> float:
    Jd = J @ d
    stretch = float(Jd @ Jd)
    return math.log(stretch) if stretch > 0.0 else -math.inf


def _mean_of_finite(terms: Sequence[float]) -> Tuple[float, int]:
    finite = [t for t in terms if math.isfinite(t)]
    degenerate = len(terms) - len(finite)
    if not finite:
        return -math.inf, degenerate
    return float(np.mean(finite)), degenerate


def trajectory_jacobians(op: StepOperator, w0, k: int, divergence_bound: float = DIVERGENCE_BOUND):
    """
    Run k steps and evaluate the Jacobian at every iterate.

    Returns:
        (trajectory, jacobians, diverged); a Jacobian failure truncates the list and
        counts as divergence
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    traj = run(op, w0, k, divergence_bound)
    jacobians: List[np.ndarray] = []
    diverged = traj.diverged
    for w in traj.iterates:
        try:
            J = op.jac(w)
        except ArithmeticError as e:
            logging.debug(f"⚠️ Jacobian failed along trajectory: {e}")
            diverged = True
            break
        if not np.all(np.isfinite(J)):
            diverged = True
            break
        jacobians.append(J)
    return traj, jacobians, diverged


def _terms_along(jacobians: Sequence[np.ndarray], d: np.ndarray) -> List[float]:
    return [_term(J, d) for J in jacobians]


def exponent_along(jacobians: Sequence[np.ndarray], d) -> float:
    """Exponent along a fixed unit direction, given the Jacobians of one trajectory."""
    return _mean_of_finite(_terms_along(jacobians, np.asarray(d, dtype=float)))[0]


def j_dagger(jacobians: Sequence[np.ndarray], dim: int) -> np.ndarray:
    """Average of J^T J over a trajectory's Jacobians (zeros when there are none)."""
    return _j_dagger(jacobians, dim)


def _terms_for_strategy(jacobians: Sequence[np.ndarray], strategy: DirectionStrategy, dim: int):
    kind = strategy.kind
    if kind is DirectionKind.FIXED:
        d = unit(np.array(strategy.vector))
    elif kind in (DirectionKind.RANDOM_FIXED, DirectionKind.PROPAGATE):
        d = random_direction(dim, strategy.seed)
    elif jacobians:
        d = top_stretch_direction(jacobians[0], strategy)
    else:
        d = random_direction(dim, strategy.seed)
    terms = []
    for J in jacobians:
        if strategy.re_estimates:
            d = top_stretch_direction(J, strategy)
        Jd = J @ d
        stretch = float(Jd @ Jd)
        terms.append(math.log(stretch) if stretch > 0.0 else -math.inf)
        if kind is DirectionKind.PROPAGATE and stretch > 0.0:
            d = Jd / math.sqrt(stretch)
    return terms, d


def k_step_exponent(
    op: StepOperator,
    w0,
    k: int,
    strategy: DirectionStrategy = DEFAULT_STRATEGY,
    divergence_bound: float = DIVERGENCE_BOUND,
) -> LyapunovReport:
    """
    k-step exponent along directions chosen by a strategy.

    Args:
        op: Fixed-point operator
        w0: Starting point
        k: Number of steps (terms j = 0..k)
        strategy: Direction strategy
        divergence_bound: Trajectory guard

    Returns:
        LyapunovReport; diverged trajectories report the partial exponent
    """
    w0 = np.asarray(w0, dtype=float).reshape(-1)
    traj, jacobians, diverged = trajectory_jacobians(op, w0, k, divergence_bound)
    terms, d = _terms_for_strategy(jacobians, strategy, w0.size)
    exponent, degenerate = _mean_of_finite(terms)
    if degenerate:
        logging.debug(f"⚠️ {degenerate} Lyapunov term(s) were -inf and excluded from the mean")
    return LyapunovReport(exponent, np.array(terms), d, traj, diverged, degenerate_terms=degenerate)


def _j_dagger(jacobians: Sequence[np.ndarray], dim: int) -> np.ndarray:
    if not jacobians:
        return np.zeros((dim, dim))
    total = sum(J.T @ J for J in jacobians)
    jd = total / len(jacobians)
    return 0.5 * (jd + jd.T)


def max_k_step_exponent(op: StepOperator, w0, k: int, divergence_bound: float = DIVERGENCE_BOUND) -> LyapunovReport:
    """
    Max k-step exponent.

    The direction is the top eigenvector of J_dagger. `exponent` is the exponent
    re-evaluated along that fixed direction; `proxy` is log(lambda_max(J_dagger)).
    """
    w0 = np.asarray(w0, dtype=float).reshape(-1)
    traj, jacobians, diverged = trajectory_jacobians(op, w0, k, divergence_bound)
    jd = _j_dagger(jacobians, w0.size)
    top_value, d = top_eigpairs_symmetric(jd, 1)[0]
    proxy = math.log(top_value) if top_value > 0.0 else -math.inf
    terms = _terms_along(jacobians, d)
    exponent, degenerate = _mean_of_finite(terms)
    return LyapunovReport(exponent, np.array(terms), d, traj, diverged, jd, proxy, degenerate)


class MultiMode(str, Enum):
    SUM = "sum"
    MIN = "min"


@dataclass(frozen=True, eq=False)
class MultiDirectionResult:
    """
    Args:
        value: Sum or min of the per-direction exponents
        directions: Orthonormal directions as rows
        exponents: Exponent along each direction
        j_dagger: The averaged matrix they came from
        diverged: Trajectory guard flag
    """
    value: float
    directions: np.ndarray
    exponents: np.ndarray
    j_dagger: np.ndarray
    diverged: bool = False

    def __iter__(self):
        # unpacks as (value, directions)
        return iter((self.value, self.directions))


def multi_direction_objective(
    op: StepOperator,
    w0,
    k: int,
    n: int,
    mode: MultiMode = MultiMode.SUM,
    divergence_bound: float = DIVERGENCE_BOUND,
) -> MultiDirectionResult:
    """
    Exponents along the top-n orthonormal eigenvectors of J_dagger, combined by sum or min.
    """
    w0 = np.asarray(w0, dtype=float).reshape(-1)
    if not 1 <= n <= w0.size:
        raise ValueError(f"n must lie in [1, {w0.size}], got {n}")
    traj, jacobians, diverged = trajectory_jacobians(op, w0, k, divergence_bound)
    jd = _j_dagger(jacobians, w0.size)
    pairs = top_eigpairs_symmetric(jd, n)
    directions = np.array([vec for _, vec in pairs])
    exponents = np.array([_mean_of_finite(_terms_along(jacobians, d))[0] for d in directions])
    value = float(np.sum(exponents)) if MultiMode(mode) is MultiMode.SUM else float(np.min(exponents))
    return MultiDirectionResult(value, directions, exponents, jd, diverged)


def exponent_k_sweep(op: StepOperator, w0, ks: Sequence[int]) -> List[Dict[str, float]]:
    """Max exponent (faithful and proxy) for several horizons."""
    rows = []
    for k in ks:
        report = max_k_step_exponent(op, w0, int(k))
        rows.append({"k": int(k), "exponent": report.exponent, "proxy": report.proxy, "diverged": report.diverged})
    return rows


def compare_direction_strategies(op: StepOperator, w0, k: int, strategies: Sequence[DirectionStrategy]) -> Dict[str, float]:
    """Exponent reached by each strategy at the same start."""
    return {s.label: k_step_exponent(op, w0, k, s).exponent for s in strategies}
