import numpy as np

from utils.autodiff.derivatives import game_hessian, joint_gradient
from utils.optimizers.step_operator import StepOperator


def sim_sgd(game, alpha: float) -> StepOperator:
    """
    Simultaneous gradient descent: F(w) = w - alpha * g(w), J(w) = I - alpha * H(w).
    """
    alpha = float(alpha)

    def step(w: np.ndarray) -> np.ndarray:
        return w - alpha * joint_gradient(game, w)

    def jac(w: np.ndarray) -> np.ndarray:
        return np.eye(w.size) - alpha * game_hessian(game, w)

    return StepOperator(name="simsgd", alpha=alpha, step_fn=step, jac_fn=jac, split=game.dim_a)
