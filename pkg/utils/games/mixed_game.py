from utils.constants import MIXED_GAME_DEFAULT_TAU
from utils.errors import ConfigError
from utils.games.game import Game, ParamSpace
from utils.games.matching_pennies import matching_pennies
from utils.games.small_ipd import small_ipd


def mixed_game(tau: float = MIXED_GAME_DEFAULT_TAU, param_space: ParamSpace = ParamSpace.LOGIT) -> Game:
    """
    Interpolation tau * SmallIPD + (1 - tau) * MatchingPennies over shared 1+1 parameters.

    Two solutions (mutual cooperation and uniform play) separated by a Hopf bifurcation.
    """
    if not 0.0 <= tau <= 1.0:
        raise ConfigError(f"tau must lie in [0, 1], got {tau}")
    ipd_part = small_ipd(param_space=param_space)
    mp_part = matching_pennies(param_space=param_space)
    tau = float(tau)

    def mix(first, second):
        return lambda w: tau * first(w) + (1.0 - tau) * second(w)

    return Game(
        name="mixed",
        dim_a=1,
        dim_b=1,
        loss_a=mix(ipd_part.loss_a, mp_part.loss_a),
        loss_b=mix(ipd_part.loss_b, mp_part.loss_b),
        param_space=ipd_part.param_space,
        strategy_labels=("A:p(C|C)", "B:p(C|C)"),
        params={"tau": tau, "param_space": ipd_part.param_space.value},
    )
