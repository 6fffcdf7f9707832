"""
Diversity table on the IPD: how many distinct solutions each strategy reaches and the
range of losses they span.
"""
import logging
import math
from dataclasses import replace
from typing import List, Sequence, Tuple

import numpy as np

from utils.commands.context import CommandResult, game_from, operator_from, output_dir, starting_point
from utils.config.run_config import RunConfig
from utils.emitters import write_csv
from utils.grr import find_starting_point, run_tree_search
from utils.optimizers import build_operator, run
from utils.parallel import parallel_map

IPD_TABLE_HEADER = ("method", "n_solutions", "min_loss_a", "max_loss_a", "min_loss_b", "max_loss_b")


def _distinct(game, points: Sequence[np.ndarray], radius: float) -> List[np.ndarray]:
    kept: List[np.ndarray] = []
    for w in points:
        s = game.strategies(w)
        if all(np.linalg.norm(game.strategies(k) - s) >= radius for k in kept):
            kept.append(w)
    return kept


def _row(method: str, losses: Sequence[Tuple[float, float]]) -> tuple:
    if not losses:
        return (method, 0, math.nan, math.nan, math.nan, math.nan)
    a = [l[0] for l in losses]
    b = [l[1] for l in losses]
    return (method, len(losses), min(a), max(a), min(b), max(b))


def cmd_ipd_table(cfg: RunConfig) -> CommandResult:
    """
    Rows:
        grr_simsgd: tuned start, branches optimized by SimSGD
        grr_lola: same tuned start, branches optimized by LOLA
        random_init_simsgd: independent SimSGD runs from random starts, no branching
        untuned_branch: SimSGD branching from an untuned random start
    """
    game = game_from(cfg)
    simsgd = operator_from(cfg, game, "simsgd")
    table = cfg.ipd_table
    lola = build_operator(game, "lola", table.lola_alpha, table.lola_eta, cfg.optimizer.full_taylor)
    tuned_cfg = cfg.grr_config()
    radius = tuned_cfg.dedup_radius

    start = find_starting_point(game, simsgd, tuned_cfg, starting_point(cfg, game)).values
    logging.info(f"ℹ️ Tuned start: {game.strategies(start).round(4).tolist()}")
    rows = []
    for method, op in (("grr_simsgd", simsgd), ("grr_lola", lola)):
        solutions, _ = run_tree_search(game, op, tuned_cfg, start=start)
        rows.append(_row(method, [s.losses for s in solutions]))

    rng = np.random.default_rng(cfg.seed)
    random_starts = [game.sample(rng) for _ in range(table.random_starts)]
    trajectories = parallel_map(lambda w0: run(simsgd, w0, tuned_cfg.optimize_steps), random_starts, cfg.threads)
    finals = _distinct(game, [t.final for t in trajectories if not t.diverged], radius)
    rows.append(_row("random_init_simsgd", [game.losses(w) for w in finals]))

    untuned_cfg = replace(cfg.grr_config(tune=False), seed=cfg.seed + 1, init=None)
    solutions, _ = run_tree_search(game, simsgd, untuned_cfg)
    rows.append(_row("untuned_branch", [s.losses for s in solutions]))

    path = write_csv(output_dir(cfg) / "ipd_table.csv", IPD_TABLE_HEADER, rows)
    logging.info(f"✅ IPD table written to {path}")
    return CommandResult([path], {"rows": {r[0]: r[1] for r in rows}})
