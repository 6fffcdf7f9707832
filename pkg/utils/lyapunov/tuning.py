import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np

from utils.autodiff.finite_diff import fd_gradient
from utils.constants import FD_STEP_OBJECTIVE
from utils.errors import ConfigError
from utils.lyapunov.exponents import MultiMode, max_k_step_exponent, multi_direction_objective
from utils.optimizers.step_operator import StepOperator


class ObjectiveKind(str, Enum):
    MAX = "max"
    SUM = "sum"
    MIN = "min"


@dataclass(frozen=True)
class ExponentObjective:
    """
    Starting-point objective to maximize.

    Args:
        kind: Max (top exponent), Sum(n) or Min(n) over the top-n directions
        n: Number of directions for Sum/Min
        use_proxy: For Max, use log(lambda_max(J_dagger)) instead of the re-evaluated exponent
    """
    kind: ObjectiveKind = ObjectiveKind.MAX
    n: int = 1
    use_proxy: bool = False

    @classmethod
    def parse(cls, text: str, use_proxy: bool = False) -> "ExponentObjective":
        """Parse "max", "sum:n" or "min:n"."""
        name, _, arg = str(text).partition(":")
        try:
            kind = ObjectiveKind(name.strip())
        except ValueError:
            raise ConfigError(f"unknown exponent objective {name!r}; expected max, sum:n or min:n")
        n = 1
        if arg:
            try:
                n = int(arg)
            except ValueError:
                raise ConfigError(f"objective direction count must be an integer, got {arg!r}")
        if n < 1:
            raise ConfigError(f"objective direction count must be >= 1, got {n}")
        return cls(kind, n, use_proxy)

    @property
    def label(self) -> str:
        return self.kind.value if self.kind is ObjectiveKind.MAX else f"{self.kind.value}:{self.n}"


def evaluate_objective(op: StepOperator, w0, k: int, objective: ExponentObjective, divergence_value: float = 0.0) -> float:
    """
    Objective value at a start; diverged or non-finite evaluations return divergence_value.
    """
    try:
        if objective.kind is ObjectiveKind.MAX:
            report = max_k_step_exponent(op, w0, k)
            value = report.proxy if objective.use_proxy else report.exponent
            diverged = report.diverged
        else:
            result = multi_direction_objective(op, w0, k, objective.n, MultiMode(objective.kind.value))
            value, diverged = result.value, result.diverged
    except ArithmeticError as e:
        logging.debug(f"⚠️ objective evaluation failed: {e}")
        return divergence_value
    if diverged or value is None or not math.isfinite(value):
        return divergence_value
    return float(value)


def tune_starting_point(
    op: StepOperator,
    w_init,
    k: int,
    objective: ExponentObjective,
    steps: int,
    lr: float,
    h: float = FD_STEP_OBJECTIVE,
    divergence_value: float = 0.0,
) -> Tuple[np.ndarray, List[float]]:
    """
    Gradient ascent on an exponent objective with central-difference gradients.

    Args:
        op: Optimizer whose exponents are maximized
        w_init: Initial point
        k: Exponent horizon
        objective: Objective to maximize
        steps: Ascent iterations
        lr: Ascent step size (0 leaves the point unchanged)
        h: Finite-difference step
        divergence_value: Value assigned to points whose evaluation diverges

    Returns:
        (final point, objective history with steps + 1 entries)
    """
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    if lr < 0:
        raise ValueError(f"learning rate must be non-negative, got {lr}")
    w = np.asarray(w_init, dtype=float).reshape(-1).copy()
    f = lambda x: evaluate_objective(op, x, k, objective, divergence_value)
    history = []
    for it in range(steps):
        history.append(f(w))
        if lr:
            w = w + lr * fd_gradient(f, w, h)
        if it % 50 == 0:
            logging.debug(f"🔍 tuning iter {it}: objective={history[-1]:.6g}")
    history.append(f(w))
    logging.info(f"ℹ️ Tuned {objective.label} exponent (k={k}) from {history[0]:.4g} to {history[-1]:.4g} in {steps} steps")
    return w, history
