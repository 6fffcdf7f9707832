"""Single-objective problems posed as games in which both players share one loss."""
from typing import Sequence

from utils.games.game import Game, LossFn, ParamSpace


def single_objective(name: str, loss: LossFn, dim_a: int, dim_b: int, **params) -> Game:
    return Game(
        name=name,
        dim_a=dim_a,
        dim_b=dim_b,
        loss_a=loss,
        loss_b=loss,
        param_space=ParamSpace.RAW,
        initializer=lambda rng: rng.normal(0.0, 1.0, dim_a + dim_b),
        strategy_labels=tuple(f"x{i}" for i in range(dim_a + dim_b)),
        params=params,
    )


def quadratic_bowl(curvatures: Sequence[float] = (1.0, 1.0)) -> Game:
    """L(w) = 0.5 * sum_i c_i w_i^2; a sink for gradient descent when every c_i > 0."""
    c = [float(v) for v in curvatures]
    if len(c) < 2:
        raise ValueError("quadratic_bowl needs at least two coordinates")

    def loss(w):
        total = 0.0
        for ci, wi in zip(c, w):
            total = total + 0.5 * ci * wi * wi
        return total

    return single_objective("quadratic_bowl", loss, 1, len(c) - 1, curvatures=c)


def two_well() -> Game:
    """L(x, y) = (x^2 - 1)^2 + y^2: minima at (+-1, 0), saddle at the origin."""
    def loss(w):
        x, y = w[0], w[1]
        bump = x * x - 1.0
        return bump * bump + y * y

    return single_objective("two_well", loss, 1, 1)
