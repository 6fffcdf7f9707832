"""
Discounted, infinitely iterated Prisoner's Dilemma with memory-one strategies.

Joint states are ordered (CC, CD, DC, DD) as (action of A, action of B). Both players'
conditional parameters index that same ordering. The loss of player i is the normalized
discounted sum of per-step losses, evaluated in closed form through the resolvent
(I - gamma P)^-1 so that it stays differentiable in dual arithmetic.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from utils.autodiff.dual import Scalar
from utils.autodiff.lu_solve import lu_solve
from utils.constants import IPD_DEFAULT_GAMMA, IPD_DEFAULT_LOSS_TABLE
from utils.errors import ConfigError, NumericalError
from utils.games.game import Game, ParamSpace, to_strategy

STATES = ("CC", "CD", "DC", "DD")
# state with the two players' roles exchanged
_SWAPPED = {0: 0, 1: 2, 2: 1, 3: 3}


@dataclass(frozen=True)
class IpdConfig:
    """
    Args:
        gamma: Discount factor in [0, 1)
        loss_table: 4 rows (CC, CD, DC, DD) of (loss A, loss B)
    """
    gamma: float = IPD_DEFAULT_GAMMA
    loss_table: Tuple[Tuple[float, float], ...] = IPD_DEFAULT_LOSS_TABLE

    def __post_init__(self):
        if not 0.0 <= self.gamma < 1.0:
            raise ConfigError(f"IPD discount must lie in [0, 1), got {self.gamma}")
        table = tuple(tuple(float(v) for v in row) for row in self.loss_table)
        if len(table) != 4 or any(len(row) != 2 for row in table):
            raise ConfigError("IPD loss table must be 4 rows of (loss A, loss B)")
        for s in range(4):
            if table[s][1] != table[_SWAPPED[s]][0]:
                raise ConfigError(f"loss of B in state {STATES[s]} must equal loss of A in {STATES[_SWAPPED[s]]}")
        object.__setattr__(self, "loss_table", table)

    def losses_of(self, player: int) -> List[float]:
        return [row[player] for row in self.loss_table]


def initial_distribution(p_a: Scalar, p_b: Scalar) -> List[Scalar]:
    """Distribution over (CC, CD, DC, DD) for the first round."""
    return [p_a * p_b, p_a * (1.0 - p_b), (1.0 - p_a) * p_b, (1.0 - p_a) * (1.0 - p_b)]


def transition_matrix(coop_a: Sequence[Scalar], coop_b: Sequence[Scalar]) -> List[List[Scalar]]:
    """
    Row-stochastic 4x4 transition matrix.

    Args:
        coop_a: Player A's cooperation probability in each state (CC, CD, DC, DD)
        coop_b: Player B's cooperation probability in each state
    """
    return [initial_distribution(coop_a[s], coop_b[s]) for s in range(4)]


def discounted_loss(s0: Sequence[Scalar], P: Sequence[Sequence[Scalar]], per_step: Sequence[float], gamma: float) -> Scalar:
    """(1 - gamma) * s0^T (I - gamma P)^-1 per_step."""
    n = len(s0)
    system = [[(1.0 if r == c else 0.0) - gamma * P[r][c] for c in range(n)] for r in range(n)]
    try:
        values = lu_solve(system, list(per_step))
    except ZeroDivisionError as e:
        raise NumericalError("singular (I - gamma P): gamma >= 1 or P not stochastic") from e
    total: Scalar = 0.0
    for s in range(n):
        total = total + s0[s] * values[s]
    return (1.0 - gamma) * total


def ipd_losses(probs_a: Sequence[Scalar], probs_b: Sequence[Scalar], config: IpdConfig, player: int) -> Scalar:
    """
    Loss of one player given both players' five cooperation probabilities
    (p_0, p|CC, p|CD, p|DC, p|DD).
    """
    s0 = initial_distribution(probs_a[0], probs_b[0])
    P = transition_matrix(probs_a[1:], probs_b[1:])
    return discounted_loss(s0, P, config.losses_of(player), config.gamma)


def ipd(config: IpdConfig = None, param_space: ParamSpace = ParamSpace.LOGIT) -> Game:
    """5+5-parameter IPD game."""
    config = config or IpdConfig()
    space = ParamSpace(param_space)

    def probabilities(w):
        probs = [to_strategy(space, v) for v in w]
        return probs[:5], probs[5:]

    def loss(player):
        def fn(w):
            probs_a, probs_b = probabilities(w)
            return ipd_losses(probs_a, probs_b, config, player)
        return fn

    labels = tuple(f"{who}:p(C{suffix})" for who in ("A", "B") for suffix in ("_0", "|CC", "|CD", "|DC", "|DD"))
    return Game(
        name="ipd",
        dim_a=5,
        dim_b=5,
        loss_a=loss(0),
        loss_b=loss(1),
        param_space=space,
        strategy_labels=labels,
        params={"gamma": config.gamma, "param_space": space.value},
    )
