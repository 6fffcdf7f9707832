"""
Exact first and second derivatives by forward-mode dual numbers.

Every function here takes plain Python callables over lists of scalars; the same
callable is evaluated on floats (values) and on Duals (derivatives).
"""
from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING, Callable, List, Sequence

import numpy as np

from utils.autodiff.dual import Dual, Scalar, primal_value, tangent_of
from utils.errors import NumericalError

if TYPE_CHECKING:
    from utils.games.game import Game

ScalarFn = Callable[[List[Scalar]], Scalar]
VectorFn = Callable[[List[Scalar]], Sequence[Scalar]]


class MixedBlock(str, Enum):
    """
    Off-diagonal second-derivative blocks used by opponent shaping.

    A_OF_B: d/d(theta_A) d/d(theta_B) of L_B, shape (dim_a, dim_b)
    B_OF_A: d/d(theta_B) d/d(theta_A) of L_A, shape (dim_b, dim_a)
    """
    A_OF_B = "A-of-B"
    B_OF_A = "B-of-A"


def _seeded(x: Sequence[float], index: int) -> List[Dual]:
    return [Dual(float(v), 1.0 if i == index else 0.0) for i, v in enumerate(x)]


def _nested_seeded(x: Sequence[float], inner: int, outer: int) -> List[Dual]:
    return [
        Dual(Dual(float(v), 1.0 if i == inner else 0.0), Dual(1.0 if i == outer else 0.0, 0.0))
        for i, v in enumerate(x)
    ]


def _check_finite(values: np.ndarray, what: str) -> np.ndarray:
    if not np.all(np.isfinite(values)):
        raise NumericalError(f"non-finite {what}; function not differentiable at this point", partial=values)
    return values


def grad(f: ScalarFn, x: Sequence[float]) -> np.ndarray:
    """
    Exact gradient of a scalar function via one forward pass per coordinate.

    Args:
        f: Scalar function of a list of scalars
        x: Evaluation point

    Returns:
        Gradient vector
    """
    x = [float(v) for v in x]
    out = np.array([primal_value(tangent_of(f(_seeded(x, i)))) for i in range(len(x))])
    return _check_finite(out, "gradient")


def jacobian(F: VectorFn, x: Sequence[float]) -> np.ndarray:
    """Exact Jacobian of a vector function; column i comes from seed e_i."""
    x = [float(v) for v in x]
    columns = []
    for i in range(len(x)):
        outputs = F(_seeded(x, i))
        columns.append([primal_value(tangent_of(y)) for y in outputs])
    jac = np.array(columns, dtype=float).T if columns else np.zeros((0, 0))
    return _check_finite(jac, "Jacobian")


def second_derivatives(f: ScalarFn, x: Sequence[float], rows: Sequence[int], cols: Sequence[int]) -> np.ndarray:
    """
    Block of second derivatives d2f / dx_r dx_c via nested duals.

    Args:
        f: Scalar function
        x: Evaluation point
        rows: Coordinates differentiated first (inner seed)
        cols: Coordinates differentiated second (outer seed)

    Returns:
        Matrix of shape (len(rows), len(cols))
    """
    x = [float(v) for v in x]
    block = np.empty((len(rows), len(cols)))
    for ci, c in enumerate(cols):
        for ri, r in enumerate(rows):
            out = f(_nested_seeded(x, r, c))
            block[ri, ci] = primal_value(tangent_of(tangent_of(out)))
    return _check_finite(block, "second derivatives")


def joint_gradient(game: "Game", w: Sequence[float]) -> np.ndarray:
    """Joint-player gradient [grad_A L_A, grad_B L_B]."""
    x = [float(v) for v in w]
    split = game.dim_a
    g = np.empty(len(x))
    for i in range(len(x)):
        loss = game.loss_a if i < split else game.loss_b
        g[i] = primal_value(tangent_of(loss(_seeded(x, i))))
    return _check_finite(g, "joint gradient")


def game_hessian(game: "Game", w: Sequence[float]) -> np.ndarray:
    """
    Game Hessian: Jacobian of the joint gradient.

    Top rows differentiate grad_A L_A, bottom rows grad_B L_B, each against all of omega.
    Not symmetric in general.
    """
    n = len(w)
    split = game.dim_a
    everything = list(range(n))
    top = second_derivatives(game.loss_a, w, list(range(split)), everything)
    bottom = second_derivatives(game.loss_b, w, list(range(split, n)), everything)
    return np.vstack([top, bottom])


def mixed_second(game: "Game", w: Sequence[float], which: MixedBlock) -> np.ndarray:
    """
    One off-diagonal second-derivative block (see MixedBlock for shapes).
    """
    n = len(w)
    block_a = list(range(game.dim_a))
    block_b = list(range(game.dim_a, n))
    if MixedBlock(which) is MixedBlock.A_OF_B:
        return second_derivatives(game.loss_b, w, block_a, block_b)
    return second_derivatives(game.loss_a, w, block_b, block_a)


def loss_gradients(game: "Game", w: Sequence[float]):
    """Full gradients of L_A and of L_B with respect to all of omega, sharing the seeds."""
    x = [float(v) for v in w]
    grad_a = np.empty(len(x))
    grad_b = np.empty(len(x))
    for i in range(len(x)):
        seeds = _seeded(x, i)
        grad_a[i] = primal_value(tangent_of(game.loss_a(seeds)))
        grad_b[i] = primal_value(tangent_of(game.loss_b(seeds)))
    return _check_finite(grad_a, "gradient of L_A"), _check_finite(grad_b, "gradient of L_B")
