import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from utils.config.run_config import RunConfig
from utils.errors import ConfigError
from utils.games import Game, build_game
from utils.optimizers import StepOperator, build_operator


@dataclass
class CommandResult:
    """Artifacts a subcommand wrote plus the headline numbers echoed in the run summary."""
    artifacts: List[Path] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)


def game_from(cfg: RunConfig) -> Game:
    return build_game(cfg.game.name, cfg.game.params)


def operator_from(cfg: RunConfig, game: Game, name: Optional[str] = None) -> StepOperator:
    o = cfg.optimizer
    return build_operator(game, name or o.name, o.alpha, o.eta, o.full_taylor)


def output_dir(cfg: RunConfig) -> Path:
    path = Path(cfg.output_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def require_point(cfg: RunConfig, game: Game) -> np.ndarray:
    if cfg.point is None:
        raise ConfigError("this subcommand needs a point (config 'point' or --point)")
    w = np.array(cfg.point, dtype=float)
    if w.size != game.dim:
        raise ConfigError(f"point has {w.size} entries, game {game.name} has {game.dim} parameters")
    return w


def require_two_parameters(game: Game, command: str) -> None:
    if game.dim != 2:
        raise ConfigError(f"{command} needs a 2-parameter game, {game.name} has {game.dim}")


def starting_point(cfg: RunConfig, game: Game) -> np.ndarray:
    if cfg.point is not None:
        return require_point(cfg, game)
    w = game.sample(np.random.default_rng(cfg.seed))
    logging.debug(f"🔍 Random initialization (seed={cfg.seed}): {w.tolist()}")
    return w
