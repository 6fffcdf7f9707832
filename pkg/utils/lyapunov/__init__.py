"""Truncated Lyapunov exponents, direction strategies and starting-point tuning."""

from .directions import DEFAULT_STRATEGY, DirectionKind, DirectionStrategy, random_direction, top_stretch_direction, unit
from .exponents import (
    LyapunovReport,
    MultiDirectionResult,
    MultiMode,
    compare_direction_strategies,
    exponent_along,
    exponent_k_sweep,
    j_dagger,
    k_step_exponent,
    lyap_term,
    max_k_step_exponent,
    multi_direction_objective,
    trajectory_jacobians,
)
from .tuning import ExponentObjective, ObjectiveKind, evaluate_objective, tune_starting_point
from .heatmap import HEATMAP_HEADER, Heatmap, exponent_heatmap, grid_axes

__all__ = [
    'DEFAULT_STRATEGY', 'DirectionKind', 'DirectionStrategy', 'random_direction', 'top_stretch_direction', 'unit',
    'LyapunovReport', 'MultiDirectionResult', 'MultiMode',
    'compare_direction_strategies', 'exponent_along', 'exponent_k_sweep', 'j_dagger', 'k_step_exponent', 'lyap_term',
    'max_k_step_exponent', 'multi_direction_objective', 'trajectory_jacobians',
    'ExponentObjective', 'ObjectiveKind', 'evaluate_objective', 'tune_starting_point',
    'HEATMAP_HEADER', 'Heatmap', 'exponent_heatmap', 'grid_axes',
]
