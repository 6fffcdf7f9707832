import logging

from utils.commands.context import CommandResult, game_from, operator_from, output_dir, require_two_parameters
from utils.config.run_config import RunConfig
from utils.emitters import write_csv
from utils.lyapunov.heatmap import HEATMAP_HEADER, exponent_heatmap


def cmd_heatmap(cfg: RunConfig) -> CommandResult:
    game = game_from(cfg)
    require_two_parameters(game, "heatmap")
    op = operator_from(cfg, game)
    heatmap = exponent_heatmap(op, cfg.grid.box, cfg.grid.resolution, cfg.lyapunov.k, cfg.grid.direction_strategy(), cfg.threads)
    path = write_csv(output_dir(cfg) / "heatmap.csv", HEATMAP_HEADER, heatmap.rows())
    summary = {"cells": int(heatmap.values.size), "diverged": int(heatmap.diverged.sum())}
    if heatmap.values.size:
        summary["argmax"] = list(heatmap.argmax())
    logging.info(f"✅ Heatmap written to {path}")
    return CommandResult([path], summary)
