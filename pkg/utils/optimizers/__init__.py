"""Optimizers as fixed-point operators with Jacobians."""

from .step_operator import StepOperator
from .sim_sgd import sim_sgd
from .lola import lola, lola_direction
from .run import Trajectory, run
from .registry import OPTIMIZERS, build_operator

__all__ = ['StepOperator', 'sim_sgd', 'lola', 'lola_direction', 'Trajectory', 'run', 'OPTIMIZERS', 'build_operator']
