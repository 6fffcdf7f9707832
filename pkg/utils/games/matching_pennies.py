from utils.games.game import Game, ParamSpace, to_strategy


def matching_pennies(param_space: ParamSpace = ParamSpace.LOGIT) -> Game:
    """
    1+1-parameter zero-sum Matching Pennies.

    With x, y the probabilities of playing the first action,
    L_A = -(2x - 1)(2y - 1) and L_B = +(2x - 1)(2y - 1). Unique Nash at (0.5, 0.5).
    """
    space = ParamSpace(param_space)

    def coupling(w):
        x = to_strategy(space, w[0])
        y = to_strategy(space, w[1])
        return (2.0 * x - 1.0) * (2.0 * y - 1.0)

    return Game(
        name="matching_pennies",
        dim_a=1,
        dim_b=1,
        loss_a=lambda w: -coupling(w),
        loss_b=coupling,
        param_space=space,
        strategy_labels=("A:p(H)", "B:p(H)"),
        params={"param_space": space.value},
    )
