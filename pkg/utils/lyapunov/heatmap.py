import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from utils.errors import ConfigError
from utils.lyapunov.directions import DirectionStrategy
from utils.lyapunov.exponents import k_step_exponent, max_k_step_exponent
from utils.optimizers.step_operator import StepOperator
from utils.parallel import parallel_map

Box = Tuple[float, float, float, float]

HEATMAP_HEADER = ("p1", "p2", "exponent", "diverged")


@dataclass(frozen=True, eq=False)
class Heatmap:
    """
    Exponents on a regular grid; values[i, j] belongs to (xs[j], ys[i]).
    """
    xs: np.ndarray
    ys: np.ndarray
    values: np.ndarray
    diverged: np.ndarray

    def rows(self) -> List[tuple]:
        """CSV rows in row-major order (p2 outer, p1 inner)."""
        out = []
        for i, y in enumerate(self.ys):
            for j, x in enumerate(self.xs):
                out.append((float(x), float(y), float(self.values[i, j]), int(bool(self.diverged[i, j]))))
        return out

    def argmax(self) -> Tuple[float, float]:
        finite = np.where(np.isfinite(self.values), self.values, -math.inf)
        i, j = np.unravel_index(int(np.argmax(finite)), finite.shape)
        return float(self.xs[j]), float(self.ys[i])


def grid_axes(box: Sequence[float], resolution: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """Node coordinates; a resolution of 1 along an axis uses the box's lower edge."""
    if len(box) != 4:
        raise ConfigError(f"grid box must be [xmin, xmax, ymin, ymax], got {list(box)}")
    if len(resolution) != 2:
        raise ConfigError(f"grid resolution must be [nx, ny], got {list(resolution)}")
    xmin, xmax, ymin, ymax = (float(v) for v in box)
    nx, ny = (int(v) for v in resolution)
    if nx < 0 or ny < 0:
        raise ConfigError(f"grid resolution must be non-negative, got {list(resolution)}")
    xs = np.linspace(xmin, xmax, nx) if nx != 1 else np.array([xmin])
    ys = np.linspace(ymin, ymax, ny) if ny != 1 else np.array([ymin])
    return xs, ys


def exponent_heatmap(
    op: StepOperator,
    box: Sequence[float],
    resolution: Sequence[int],
    k: int,
    strategy: Optional[DirectionStrategy] = None,
    threads: Optional[int] = None,
) -> Heatmap:
    """
    Evaluate the exponent at every node of a 2-D grid of starting points.

    Args:
        op: Operator over 2 joint parameters
        box: [xmin, xmax, ymin, ymax] in parameter space
        resolution: [nx, ny]
        k: Exponent horizon
        strategy: None for the max k-step exponent, otherwise the strategy's exponent
        threads: Worker count (defaults to RIDGEWALK_THREADS)

    Returns:
        Heatmap; cells are independent, merged by grid index
    """
    if op.split is not None and op.split != 1:
        raise ConfigError(f"heatmaps need a 2-parameter game, operator {op.name} has split {op.split}")
    xs, ys = grid_axes(box, resolution)
    cells = [(i, j) for i in range(len(ys)) for j in range(len(xs))]

    def evaluate(cell):
        i, j = cell
        w0 = np.array([xs[j], ys[i]])
        report = max_k_step_exponent(op, w0, k) if strategy is None else k_step_exponent(op, w0, k, strategy)
        return report.exponent, report.diverged

    results = parallel_map(evaluate, cells, threads)
    values = np.full((len(ys), len(xs)), np.nan)
    diverged = np.zeros((len(ys), len(xs)), dtype=bool)
    for (i, j), (value, flag) in zip(cells, results):
        values[i, j] = value
        diverged[i, j] = flag
    logging.info(f"ℹ️ Heatmap {len(xs)}x{len(ys)} (k={k}): {int(diverged.sum())} diverged cell(s)")
    return Heatmap(xs, ys, values, diverged)
