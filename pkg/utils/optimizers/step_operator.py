from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class StepOperator:
    """
    An optimizer viewed as a fixed-point map F on joint parameters, with its Jacobian.

    Args:
        name: Tag such as "simsgd", "lola" or "one_dim_map"
        alpha: Step size
        step_fn: w -> F(w)
        jac_fn: w -> dF/dw(w)
        split: Index where player A's block ends (None for maps that are not games)
        params: Extra hyperparameters, echoed in reports
    """
    name: str
    alpha: float
    step_fn: Callable[[np.ndarray], np.ndarray]
    jac_fn: Callable[[np.ndarray], np.ndarray]
    split: Optional[int] = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"step size must be positive, got {self.alpha}")

    def step(self, w) -> np.ndarray:
        return np.asarray(self.step_fn(np.asarray(w, dtype=float)), dtype=float)

    def jac(self, w) -> np.ndarray:
        return np.atleast_2d(np.asarray(self.jac_fn(np.asarray(w, dtype=float)), dtype=float))

    def describe(self) -> dict:
        return {"name": self.name, "alpha": self.alpha, **self.params}
