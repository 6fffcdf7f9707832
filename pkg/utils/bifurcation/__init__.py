"""Normal-form classification of candidate bifurcation points."""

from .verdict import KIND_PRECEDENCE, SYMMETRY_CONVENTION, BifurcationKind, BifurcationVerdict, Criticality
from .one_dim import (
    Equilibrium,
    EquilibriumBranches,
    ParamField1D,
    classify_1d,
    equilibrium_branches,
    newton_root,
    observed_side,
    odd_residual,
    stencil_derivatives,
)
from .hopf import classify_hopf_2d, planar_eigen, simulate_cycle, state_jacobian
from .game_point import classify_game_point, reduce_1d, reduce_2d, stretch_axes

__all__ = [
    'KIND_PRECEDENCE', 'SYMMETRY_CONVENTION', 'BifurcationKind', 'BifurcationVerdict', 'Criticality',
    'Equilibrium', 'EquilibriumBranches', 'ParamField1D', 'classify_1d', 'equilibrium_branches',
    'newton_root', 'observed_side', 'odd_residual', 'stencil_derivatives',
    'classify_hopf_2d', 'planar_eigen', 'simulate_cycle', 'state_jacobian',
    'classify_game_point', 'reduce_1d', 'reduce_2d', 'stretch_axes',
]
