"""Forward-mode automatic differentiation with nested duals, plus finite-difference oracles."""

from .dual import Dual, exp, log, logistic, primal_value, tangent_of
from .lu_solve import lu_solve
from .derivatives import (
    MixedBlock,
    game_hessian,
    grad,
    jacobian,
    joint_gradient,
    loss_gradients,
    mixed_second,
    second_derivatives,
)
from .finite_diff import fd_gradient, fd_jacobian

__all__ = [
    'Dual', 'exp', 'log', 'logistic', 'primal_value', 'tangent_of',
    'lu_solve',
    'MixedBlock', 'game_hessian', 'grad', 'jacobian', 'joint_gradient', 'loss_gradients', 'mixed_second',
    'second_derivatives',
    'fd_gradient', 'fd_jacobian',
]
