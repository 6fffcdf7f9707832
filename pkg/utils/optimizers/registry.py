from utils.errors import ConfigError
from utils.optimizers.lola import lola
from utils.optimizers.sim_sgd import sim_sgd
from utils.optimizers.step_operator import StepOperator

OPTIMIZERS = ("simsgd", "lola")


def build_operator(game, name: str, alpha: float, eta: float = 0.0, full_taylor: bool = False) -> StepOperator:
    """
    Build a registered optimizer for a game.

    Args:
        game: Game to optimize
        name: "simsgd" or "lola"
        alpha: Step size
        eta: LOLA look-ahead (ignored by simsgd)
        full_taylor: LOLA variant switch

    Returns:
        StepOperator
    """
    if alpha is None or not float(alpha) > 0:
        raise ConfigError(f"optimizer alpha must be positive, got {alpha}")
    if name == "simsgd":
        return sim_sgd(game, alpha)
    if name == "lola":
        if eta is None or float(eta) < 0:
            raise ConfigError(f"LOLA eta must be non-negative, got {eta}")
        return lola(game, alpha, eta, full_taylor=full_taylor)
    raise ConfigError(f"unknown optimizer {name!r}; available: {', '.join(OPTIMIZERS)}")
