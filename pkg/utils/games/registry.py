"""Game construction by name + JSON parameter object."""
import logging
from typing import Any, Callable, Dict

from utils.constants import MIXED_GAME_DEFAULT_TAU
from utils.errors import ConfigError
from utils.games.game import Game, ParamSpace
from utils.games.ipd import IpdConfig, ipd
from utils.games.matching_pennies import matching_pennies
from utils.games.mixed_game import mixed_game
from utils.games.random_subspace import random_subspace
from utils.games.single_objective import quadratic_bowl, two_well
from utils.games.small_ipd import small_ipd


def _space(params: Dict[str, Any]) -> ParamSpace:
    try:
        return ParamSpace(params.get("param_space", ParamSpace.LOGIT.value))
    except ValueError:
        raise ConfigError(f"unknown param_space {params.get('param_space')!r}; expected 'logit' or 'raw'")


def _ipd_config(params: Dict[str, Any]) -> IpdConfig:
    kwargs = {}
    if "gamma" in params:
        kwargs["gamma"] = float(params["gamma"])
    if "loss_table" in params:
        kwargs["loss_table"] = tuple(tuple(row) for row in params["loss_table"])
    return IpdConfig(**kwargs)


_BUILDERS: Dict[str, Callable[[Dict[str, Any]], Game]] = {
    "matching_pennies": lambda p: matching_pennies(_space(p)),
    "ipd": lambda p: ipd(_ipd_config(p), _space(p)),
    "small_ipd": lambda p: small_ipd(
        _ipd_config(p), _space(p), **({"defect_response": float(p["defect_response"])} if "defect_response" in p else {})
    ),
    "mixed": lambda p: mixed_game(float(p.get("tau", MIXED_GAME_DEFAULT_TAU)), _space(p)),
    "random_subspace": lambda p: random_subspace(
        build_game(p.get("base", {}).get("name", "ipd"), p.get("base", {}).get("params", {})), int(p.get("seed", 0))
    ),
    "quadratic_bowl": lambda p: quadratic_bowl(p.get("curvatures", (1.0, 1.0))),
    "two_well": lambda p: two_well(),
}

_ALLOWED_KEYS = {
    "matching_pennies": {"param_space"},
    "ipd": {"gamma", "loss_table", "param_space"},
    "small_ipd": {"gamma", "loss_table", "param_space", "defect_response"},
    "mixed": {"tau", "param_space"},
    "random_subspace": {"base", "seed"},
    "quadratic_bowl": {"curvatures"},
    "two_well": set(),
}


def available_games():
    return sorted(_BUILDERS)


def build_game(name: str, params: Dict[str, Any] = None) -> Game:
    """
    Build a registered game.

    Args:
        name: Registered game name
        params: Game-specific parameters; unknown keys are rejected

    Returns:
        Game instance
    """
    params = dict(params or {})
    if name not in _BUILDERS:
        raise ConfigError(f"unknown game {name!r}; available: {', '.join(available_games())}")
    unknown = set(params) - _ALLOWED_KEYS[name]
    if unknown:
        raise ConfigError(f"unknown parameter(s) for game {name!r}: {', '.join(sorted(unknown))}")
    try:
        game = _BUILDERS[name](params)
    except ConfigError:
        raise
    except (TypeError, ValueError, AttributeError) as e:
        raise ConfigError(f"invalid parameters for game {name!r}: {e}")
    logging.debug(f"🔍 Built game {game.name} ({game.dim_a}+{game.dim_b} parameters)")
    return game
