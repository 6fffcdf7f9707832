import logging

import numpy as np

from utils.commands.context import CommandResult, game_from, operator_from, output_dir, require_two_parameters
from utils.config.run_config import RunConfig
from utils.emitters import write_csv
from utils.lyapunov.heatmap import grid_axes
from utils.optimizers import OPTIMIZERS, run
from utils.parallel import parallel_map

PHASE_PORTRAIT_HEADER = ("optimizer", "traj_id", "step", "p1", "p2")


def cmd_phase_portrait(cfg: RunConfig) -> CommandResult:
    """
    Trajectories of every registered optimizer from each grid start.

    Rows hold displayed strategies (probabilities for logit games). LOLA uses the
    configured eta; both optimizers share the configured alpha.
    """
    game = game_from(cfg)
    require_two_parameters(game, "phase-portrait")
    xs, ys = grid_axes(cfg.grid.box, cfg.grid.resolution)
    starts = [np.array([x, y]) for y in ys for x in xs]

    rows = []
    finals = {}
    for name in OPTIMIZERS:
        op = operator_from(cfg, game, name)
        trajectories = parallel_map(lambda w0: run(op, w0, cfg.steps), starts, cfg.threads)
        finals[name] = 0
        for traj_id, traj in enumerate(trajectories):
            for step, w in enumerate(traj.iterates):
                p1, p2 = game.strategies(w)
                rows.append((name, traj_id, step, p1, p2))
            finals[name] += int(traj.diverged)

    path = write_csv(output_dir(cfg) / "phase_portrait.csv", PHASE_PORTRAIT_HEADER, rows)
    logging.info(f"✅ Wrote {len(starts)} start(s) x {len(OPTIMIZERS)} optimizer(s) to {path}")
    return CommandResult([path], {"starts": len(starts), "diverged": finals})
