from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from utils.grr.verify import fixed_point_residual
from utils.lyapunov.exponents import multi_direction_objective
from utils.optimizers.step_operator import StepOperator


@dataclass(frozen=True, eq=False)
class RankedCandidate:
    """
    Args:
        index: Position in the input list
        params: Candidate point
        score: Sum of positive exponents over the top-n directions
        residual: ||F(w) - w|| / alpha, the gradient norm for gradient-type operators
    """
    index: int
    params: np.ndarray
    score: float
    residual: float


def rank_starting_points(candidates: Sequence, op: StepOperator, k: int, n: Optional[int] = None) -> List[RankedCandidate]:
    """
    Order candidates by the sum of their positive exponents, largest first.

    Ties go to the smaller fixed-point residual, then to input order.
    """
    ranked = []
    for index, w in enumerate(candidates):
        w = np.asarray(getattr(w, "values", w), dtype=float).reshape(-1)
        result = multi_direction_objective(op, w, k, min(n or w.size, w.size))
        positive = result.exponents[np.isfinite(result.exponents) & (result.exponents > 0)]
        residual = fixed_point_residual(op, w)
        ranked.append(RankedCandidate(index, w, float(np.sum(positive)), residual))
    return sorted(ranked, key=lambda c: (-c.score, c.residual, c.index))
