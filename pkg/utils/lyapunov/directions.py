"""Direction strategies for truncated Lyapunov exponents."""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from utils.errors import ConfigError
from utils.spectral.power_iteration import power_iteration
from utils.spectral.queries import top_eigpairs_symmetric


class DirectionKind(str, Enum):
    RANDOM_FIXED = "random_fixed"
    EIGH_FIRST = "eigh_first"
    EIGH_EVERY = "eigh_every"
    POWER_ITER_FIRST = "power_iter_first"
    POWER_ITER_EVERY = "power_iter_every"
    PROPAGATE = "propagate"
    FIXED = "fixed"


@dataclass(frozen=True)
class DirectionStrategy:
    """
    How the displacement direction d is chosen along a trajectory.

    Args:
        kind: Strategy tag
        seed: Seed for random directions (RandomFixed, Propagate start)
        iters: Power-iteration budget (PowerIter*)
        vector: Explicit direction (Fixed)
    """
    kind: DirectionKind
    seed: int = 0
    iters: int = 50
    vector: Optional[Tuple[float, ...]] = None

    @classmethod
    def random_fixed(cls, seed: int = 0) -> "DirectionStrategy":
        return cls(DirectionKind.RANDOM_FIXED, seed=seed)

    @classmethod
    def eigh_first(cls) -> "DirectionStrategy":
        return cls(DirectionKind.EIGH_FIRST)

    @classmethod
    def eigh_every(cls) -> "DirectionStrategy":
        return cls(DirectionKind.EIGH_EVERY)

    @classmethod
    def power_iter_first(cls, iters: int = 50) -> "DirectionStrategy":
        return cls(DirectionKind.POWER_ITER_FIRST, iters=iters)

    @classmethod
    def power_iter_every(cls, iters: int = 50) -> "DirectionStrategy":
        return cls(DirectionKind.POWER_ITER_EVERY, iters=iters)

    @classmethod
    def propagate(cls, seed: int = 0) -> "DirectionStrategy":
        return cls(DirectionKind.PROPAGATE, seed=seed)

    @classmethod
    def fixed(cls, d) -> "DirectionStrategy":
        return cls(DirectionKind.FIXED, vector=tuple(float(v) for v in np.asarray(d).reshape(-1)))

    @classmethod
    def parse(cls, text: str) -> "DirectionStrategy":
        """Parse "kind" or "kind:number" (seed for random/propagate, iterations for power)."""
        name, _, arg = str(text).partition(":")
        try:
            kind = DirectionKind(name.strip())
        except ValueError:
            valid = ", ".join(k.value for k in DirectionKind if k is not DirectionKind.FIXED)
            raise ConfigError(f"unknown direction strategy {name!r}; expected one of {valid}")
        if kind is DirectionKind.FIXED:
            raise ConfigError("fixed directions cannot be given by name")
        if not arg:
            return cls(kind)
        try:
            number = int(arg)
        except ValueError:
            raise ConfigError(f"direction strategy argument must be an integer, got {arg!r}")
        if kind in (DirectionKind.POWER_ITER_FIRST, DirectionKind.POWER_ITER_EVERY):
            return cls(kind, iters=number)
        return cls(kind, seed=number)

    @property
    def label(self) -> str:
        if self.kind in (DirectionKind.POWER_ITER_FIRST, DirectionKind.POWER_ITER_EVERY):
            return f"{self.kind.value}:{self.iters}"
        if self.kind in (DirectionKind.RANDOM_FIXED, DirectionKind.PROPAGATE):
            return f"{self.kind.value}:{self.seed}"
        return self.kind.value

    @property
    def re_estimates(self) -> bool:
        return self.kind in (DirectionKind.EIGH_EVERY, DirectionKind.POWER_ITER_EVERY)


DEFAULT_STRATEGY = DirectionStrategy.eigh_every()


def unit(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ConfigError("direction must be non-zero")
    return v / norm


def random_direction(dim: int, seed: int) -> np.ndarray:
    return unit(np.random.default_rng(seed).normal(size=dim))


def top_stretch_direction(J: np.ndarray, strategy: DirectionStrategy) -> np.ndarray:
    """Leading eigenvector of J^T J, by dense decomposition or by power iteration."""
    if strategy.kind in (DirectionKind.POWER_ITER_FIRST, DirectionKind.POWER_ITER_EVERY):
        _, v = power_iteration(lambda u: J.T @ (J @ u), J.shape[1], iters=strategy.iters, seed=strategy.seed)
        return unit(v)
    return unit(top_eigpairs_symmetric(J.T @ J, 1)[0][1])
