"""
Core game types: joint parameter vectors and pure two-player differentiable games.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Sequence, Tuple

import numpy as np

from utils.autodiff.dual import Scalar, logistic
from utils.errors import ConfigError

LossFn = Callable[[List[Scalar]], Scalar]
Initializer = Callable[[np.random.Generator], np.ndarray]


class ParamSpace(str, Enum):
    """How parameter values map to strategies."""
    LOGIT = "logit"
    RAW = "raw"


@dataclass(frozen=True, eq=False)
class JointParams:
    """
    Concatenated parameters omega = [theta_A, theta_B].

    Args:
        values: Real vector
        split: Index where player A's block ends
    """
    values: np.ndarray
    split: int

    def __post_init__(self):
        values = np.array(self.values, dtype=float).reshape(-1)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        # both player blocks non-empty
        if not 1 <= self.split < values.size:
            raise ConfigError(f"split must lie in [1, {values.size - 1}], got {self.split}")
        if not np.all(np.isfinite(values)):
            raise ConfigError("joint parameters must be finite")

    @property
    def block_a(self) -> np.ndarray:
        return self.values[: self.split]

    @property
    def block_b(self) -> np.ndarray:
        return self.values[self.split:]

    def with_values(self, values: Sequence[float]) -> "JointParams":
        return JointParams(np.asarray(values, dtype=float), self.split)

    def to_list(self) -> List[float]:
        return self.values.tolist()


def _default_initializer(dim: int, param_space: ParamSpace) -> Initializer:
    if param_space is ParamSpace.RAW:
        return lambda rng: rng.uniform(0.0, 1.0, dim)
    return lambda rng: rng.normal(0.0, 1.0, dim)


@dataclass(frozen=True)
class Game:
    """
    A pure two-player differentiable game.

    Losses take a list of scalars (floats or Duals) of length dim_a + dim_b and must be
    deterministic and finite on finite inputs.
    """
    name: str
    dim_a: int
    dim_b: int
    loss_a: LossFn
    loss_b: LossFn
    param_space: ParamSpace = ParamSpace.LOGIT
    initializer: Initializer = None
    strategy_labels: Tuple[str, ...] = ()
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim_a < 1 or self.dim_b < 1:
            raise ConfigError(f"each player needs at least one parameter, got ({self.dim_a}, {self.dim_b})")
        if self.initializer is None:
            object.__setattr__(self, "initializer", _default_initializer(self.dim, self.param_space))
        if not self.strategy_labels:
            labels = tuple(f"A:p{i}" for i in range(self.dim_a)) + tuple(f"B:p{i}" for i in range(self.dim_b))
            object.__setattr__(self, "strategy_labels", labels)

    @property
    def dim(self) -> int:
        return self.dim_a + self.dim_b

    def joint(self, values: Sequence[float]) -> JointParams:
        return JointParams(np.asarray(values, dtype=float), self.dim_a)

    def losses(self, w: Sequence[float]) -> Tuple[float, float]:
        x = [float(v) for v in np.asarray(w, dtype=float)]
        return float(self.loss_a(x)), float(self.loss_b(x))

    def strategies(self, w: Sequence[float]) -> np.ndarray:
        """Displayed strategies: probabilities for Logit games, raw values otherwise."""
        w = np.asarray(w, dtype=float)
        if self.param_space is ParamSpace.LOGIT:
            return np.array([logistic(float(v)) for v in w])
        return w.copy()

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return np.asarray(self.initializer(rng), dtype=float)


def to_strategy(param_space: ParamSpace, value: Scalar) -> Scalar:
    """Map one parameter to a probability in the game's parameterization."""
    return logistic(value) if param_space is ParamSpace.LOGIT else value
