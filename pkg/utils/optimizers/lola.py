"""
Learning with Opponent-Learning Awareness as a fixed-point operator.

Player A descends grad_A L_A - eta * (grad_A grad_B L_B) (grad_B L_A), B symmetrically:
each anticipates one naive gradient step of the opponent and shapes it. With
full_taylor=True the first-order Taylor term through the opponent's own loss,
-eta * (grad_A grad_B L_A) (grad_B L_B), is added as well.
"""
import numpy as np

from utils.autodiff.derivatives import MixedBlock, game_hessian, joint_gradient, loss_gradients, mixed_second
from utils.autodiff.finite_diff import fd_jacobian
from utils.constants import FD_STEP_OPERATOR_JAC
from utils.optimizers.step_operator import StepOperator


def lola_direction(game, w: np.ndarray, eta: float, full_taylor: bool = False) -> np.ndarray:
    """LOLA update direction (the quantity multiplied by -alpha)."""
    split = game.dim_a
    if not eta:
        return joint_gradient(game, w)
    grad_la, grad_lb = loss_gradients(game, w)
    own = np.concatenate([grad_la[:split], grad_lb[split:]])
    cross_a_of_b = mixed_second(game, w, MixedBlock.A_OF_B)    # (dim_a, dim_b) of L_B
    cross_b_of_a = mixed_second(game, w, MixedBlock.B_OF_A)    # (dim_b, dim_a) of L_A
    shaping_a = cross_a_of_b @ grad_la[split:]
    shaping_b = cross_b_of_a @ grad_lb[:split]
    direction = own - eta * np.concatenate([shaping_a, shaping_b])
    if full_taylor:
        # grad_A grad_B L_A is the transpose of the B-of-A block, and vice versa
        taylor_a = cross_b_of_a.T @ grad_lb[split:]
        taylor_b = cross_a_of_b.T @ grad_la[:split]
        direction = direction - eta * np.concatenate([taylor_a, taylor_b])
    return direction


def lola(game, alpha: float, eta: float, full_taylor: bool = False, jac_step: float = FD_STEP_OPERATOR_JAC) -> StepOperator:
    """
    LOLA fixed-point operator.

    The Jacobian involves third derivatives of the losses and is taken by central
    differences over the step; with eta == 0 the operator is SimSGD exactly, Jacobian included.
    """
    alpha = float(alpha)
    eta = float(eta)
    if alpha <= 0 or eta < 0:
        raise ValueError(f"LOLA needs alpha > 0 and eta >= 0, got alpha={alpha}, eta={eta}")

    def step(w: np.ndarray) -> np.ndarray:
        return w - alpha * lola_direction(game, w, eta, full_taylor)

    def jac(w: np.ndarray) -> np.ndarray:
        if not eta:
            return np.eye(w.size) - alpha * game_hessian(game, w)
        return fd_jacobian(step, w, jac_step)

    return StepOperator(
        name="lola",
        alpha=alpha,
        step_fn=step,
        jac_fn=jac,
        split=game.dim_a,
        params={"eta": eta, "full_taylor": full_taylor},
    )
