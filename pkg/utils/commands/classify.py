import logging

from utils.bifurcation import classify_game_point
from utils.commands.context import CommandResult, game_from, operator_from, output_dir, require_point
from utils.config.run_config import RunConfig
from utils.emitters import write_json


def cmd_classify(cfg: RunConfig) -> CommandResult:
    game = game_from(cfg)
    op = operator_from(cfg, game)
    w = require_point(cfg, game)
    c = cfg.classify
    verdict = classify_game_point(game, op, w, c.axis, c.tol, c.alpha_ratio)
    path = write_json(output_dir(cfg) / "classify.json", {
        "game": game.name,
        "optimizer": op.describe(),
        "point": w,
        "verdict": verdict.to_dict(),
    })
    logging.info(f"✅ Verdict {verdict.kind.value} written to {path}")
    return CommandResult([path], {"kind": verdict.kind.value})
