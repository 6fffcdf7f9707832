import numpy as np

from utils.games.game import Game, ParamSpace


def random_subspace(base: Game, seed: int) -> Game:
    """
    Restrict a game to one line per player.

    Player A controls x and plays v_A * x + b_A, player B controls y and plays v_B * y + b_B.
    Directions are drawn entrywise from U[0, 1] and normalized; offsets come from the base
    game's initializer. Deterministic given the seed.
    """
    rng = np.random.default_rng(seed)
    v_a = rng.uniform(0.0, 1.0, base.dim_a)
    v_b = rng.uniform(0.0, 1.0, base.dim_b)
    v_a /= np.linalg.norm(v_a)
    v_b /= np.linalg.norm(v_b)
    offset = base.sample(rng)
    b_a, b_b = offset[: base.dim_a], offset[base.dim_a:]
    # plain floats keep dual arithmetic away from numpy scalars
    va, vb, ba, bb = v_a.tolist(), v_b.tolist(), b_a.tolist(), b_b.tolist()

    def embed(w):
        x, y = w[0], w[1]
        return [b + v * x for v, b in zip(va, ba)] + [b + v * y for v, b in zip(vb, bb)]

    return Game(
        name=f"random_subspace({base.name})",
        dim_a=1,
        dim_b=1,
        loss_a=lambda w: base.loss_a(embed(w)),
        loss_b=lambda w: base.loss_b(embed(w)),
        param_space=ParamSpace.RAW,
        initializer=lambda r: r.normal(0.0, 1.0, 2),
        strategy_labels=("A:x", "B:y"),
        params={
            "base": base.name,
            "seed": seed,
            "direction_a": va,
            "direction_b": vb,
            "offset_a": ba,
            "offset_b": bb,
        },
    )
