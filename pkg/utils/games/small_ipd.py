from utils.constants import SMALL_IPD_DEFECT_RESPONSE
from utils.games.game import Game, ParamSpace, to_strategy
from utils.games.ipd import IpdConfig, ipd_losses


def small_ipd_probabilities(u_a, u_b, defect_response: float = SMALL_IPD_DEFECT_RESPONSE):
    """
    Expand the tied 1+1 parameters into full IPD strategies.

    Each player cooperates with probability u after the opponent cooperated and with
    probability `defect_response` after the opponent defected; the first round behaves
    as if the opponent had cooperated.
    """
    d = defect_response
    # states (CC, CD, DC, DD): A reacts to B's action, B reacts to A's action
    probs_a = [u_a, u_a, d, u_a, d]
    probs_b = [u_b, u_b, u_b, d, d]
    return probs_a, probs_b


def small_ipd(
    config: IpdConfig = None,
    param_space: ParamSpace = ParamSpace.LOGIT,
    defect_response: float = SMALL_IPD_DEFECT_RESPONSE,
) -> Game:
    """2-parameter IPD with defect-defect and tit-for-tat equilibria."""
    config = config or IpdConfig()
    space = ParamSpace(param_space)

    def loss(player):
        def fn(w):
            probs_a, probs_b = small_ipd_probabilities(to_strategy(space, w[0]), to_strategy(space, w[1]), defect_response)
            return ipd_losses(probs_a, probs_b, config, player)
        return fn

    return Game(
        name="small_ipd",
        dim_a=1,
        dim_b=1,
        loss_a=loss(0),
        loss_b=loss(1),
        param_space=space,
        strategy_labels=("A:p(C|C)", "B:p(C|C)"),
        params={"gamma": config.gamma, "defect_response": defect_response, "param_space": space.value},
    )
