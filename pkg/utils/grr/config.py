from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from utils.constants import DEDUP_RADIUS, LAMBDA_FLOOR, MAX_DEPTH, REBRANCH_TOL
from utils.errors import ConfigError
from utils.lyapunov.tuning import ExponentObjective


class BranchMode(str, Enum):
    SCALED_JUMP = "scaled_jump"
    WALK_UNTIL_FLIP = "walk_until_flip"


@dataclass(frozen=True)
class GrrConfig:
    """
    Tree-search settings.

    Args:
        objective: Starting-point exponent objective
        k: Exponent horizon used for tuning and for branch directions
        tune_steps: Ascent iterations for the starting point (0 keeps the initialization)
        tune_lr: Ascent step size
        branch_mode: How a branch leaves its origin
        n_directions: Top-n directions considered per split
        max_depth: Deepest allowed branch
        optimize_steps: Optimizer steps per branch
        grad_tol: Solution tolerance on the fixed-point residual ||F(w) - w|| / alpha
        stability_tol: Solution tolerance on the spectral radius above 1
        rebranch_tol: Stretch threshold above 1 for splitting and re-branching
        dedup_radius: Solutions closer than this in strategy space are merged
        base_scale: ScaledJump base step s
        lambda_floor: ScaledJump lower bound on the exponent factor
        walk_step: WalkUntilFlip step beta
        walk_max: WalkUntilFlip step cap
        cycle_window: Trailing window inspected for cycles
        filter_directions: Branch only along directions that stretch
        seed: Seed for the random initialization
        init: Explicit initialization (overrides the seed)
        threads: Branch-level parallelism (defaults to RIDGEWALK_THREADS)
    """
    objective: ExponentObjective = ExponentObjective()
    k: int = 0
    tune_steps: int = 0
    tune_lr: float = 0.1
    branch_mode: BranchMode = BranchMode.SCALED_JUMP
    n_directions: int = 2
    max_depth: int = MAX_DEPTH
    optimize_steps: int = 500
    grad_tol: float = 1e-3
    stability_tol: float = 1e-3
    rebranch_tol: float = REBRANCH_TOL
    dedup_radius: float = DEDUP_RADIUS
    base_scale: float = 1.0
    lambda_floor: float = LAMBDA_FLOOR
    walk_step: float = 0.05
    walk_max: int = 200
    cycle_window: int = 50
    filter_directions: bool = True
    seed: int = 0
    init: Optional[Tuple[float, ...]] = None
    threads: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "branch_mode", BranchMode(self.branch_mode))
        if self.init is not None:
            object.__setattr__(self, "init", tuple(float(v) for v in self.init))
        for name in ("k", "tune_steps", "optimize_steps", "walk_max", "cycle_window"):
            if getattr(self, name) < 0:
                raise ConfigError(f"grr.{name} must be non-negative, got {getattr(self, name)}")
        if self.n_directions < 1:
            raise ConfigError(f"grr.n_directions must be >= 1, got {self.n_directions}")
        if self.max_depth < 1:
            raise ConfigError(f"grr.max_depth must be >= 1, got {self.max_depth}")
        for name in ("tune_lr", "grad_tol", "stability_tol", "rebranch_tol", "dedup_radius", "base_scale", "lambda_floor", "walk_step"):
            if getattr(self, name) < 0:
                raise ConfigError(f"grr.{name} must be non-negative, got {getattr(self, name)}")

    def node_bound(self, dim: int) -> int:
        """Largest possible tree: 1 + sum over depths of (2n)^depth."""
        fan = 2 * min(self.n_directions, dim)
        return 1 + sum(fan ** d for d in range(1, self.max_depth + 1))
