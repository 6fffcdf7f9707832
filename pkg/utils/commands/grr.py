import logging
from pathlib import Path
from typing import List, Sequence, Tuple

from utils.commands.context import CommandResult, game_from, operator_from, output_dir
from utils.config.run_config import RunConfig
from utils.emitters import write_csv, write_json
from utils.games import Game
from utils.grr import BranchTree, SolutionRecord, run_tree_search


def solutions_header(game: Game) -> Tuple[str, ...]:
    return tuple(game.strategy_labels) + ("loss_a", "loss_b")


def solution_rows(solutions: Sequence[SolutionRecord]) -> List[tuple]:
    return [tuple(s.strategies) + tuple(s.losses) for s in solutions]


def write_search(path_prefix: Path, game: Game, op, solutions, tree: BranchTree) -> List[Path]:
    tree_path = write_json(path_prefix.with_name(path_prefix.name + "_tree.json"), {
        "game": {"name": game.name, "params": game.params},
        "optimizer": op.describe(),
        "tree": tree.to_dict(),
        "solutions": [s.to_dict() for s in solutions],
    })
    table_path = write_csv(path_prefix.with_name(path_prefix.name + "_solutions.csv"), solutions_header(game), solution_rows(solutions))
    return [tree_path, table_path]


def cmd_grr(cfg: RunConfig) -> CommandResult:
    """Tree search from the tuned start; tree JSON plus a solutions table."""
    game = game_from(cfg)
    op = operator_from(cfg, game)
    solutions, tree = run_tree_search(game, op, cfg.grr_config())
    artifacts = write_search(output_dir(cfg) / "grr", game, op, solutions, tree)
    losses_a = [s.losses[0] for s in solutions]
    summary = {"nodes": len(tree.nodes), "solutions": len(solutions), "root_fallback": tree.root_fallback}
    if losses_a:
        summary["loss_a_range"] = [min(losses_a), max(losses_a)]
    logging.info(f"✅ {len(solutions)} solution(s) written to {artifacts[1]}")
    return CommandResult(artifacts, summary)
