import numpy as np

from utils.optimizers.step_operator import StepOperator


def one_dim_map(r: float, classical: bool = False) -> StepOperator:
    """
    Scalar iteration used as a canonical bifurcation example.

    Default: F(x) = x + r + x^2 with J(x) = 1 + 2x.
    classical=True: the logistic map F(x) = r x (1 - x) with J(x) = r (1 - 2x).
    """
    r = float(r)
    if classical:
        step = lambda x: r * x * (1.0 - x)
        jac = lambda x: np.array([[r * (1.0 - 2.0 * x[0])]])
        name = "logistic_map"
    else:
        step = lambda x: x + r + x * x
        jac = lambda x: np.array([[1.0 + 2.0 * x[0]]])
        name = "one_dim_map"
    return StepOperator(name=name, alpha=1.0, step_fn=step, jac_fn=jac, params={"r": r, "classical": classical})
