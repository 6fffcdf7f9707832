"""Two-player differentiable games and the analytic test problems."""

from .game import Game, JointParams, ParamSpace, to_strategy
from .matching_pennies import matching_pennies
from .ipd import IpdConfig, discounted_loss, initial_distribution, ipd, ipd_losses, transition_matrix
from .small_ipd import small_ipd, small_ipd_probabilities
from .mixed_game import mixed_game
from .random_subspace import random_subspace
from .one_dim_map import one_dim_map
from .single_objective import quadratic_bowl, single_objective, two_well
from .registry import available_games, build_game

__all__ = [
    'Game', 'JointParams', 'ParamSpace', 'to_strategy',
    'matching_pennies',
    'IpdConfig', 'discounted_loss', 'initial_distribution', 'ipd', 'ipd_losses', 'transition_matrix',
    'small_ipd', 'small_ipd_probabilities',
    'mixed_game',
    'random_subspace',
    'one_dim_map',
    'quadratic_bowl', 'single_objective', 'two_well',
    'available_games', 'build_game',
]
