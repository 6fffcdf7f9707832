"""
Branching optimization tree search.

find start -> root -> split -> FIFO over pending branches {branch step, optimize,
verify, re-branch while the optimized point still stretches and depth allows}.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from utils.grr.branching import apply_branch_step, find_starting_point, split_branch
from utils.grr.config import GrrConfig
from utils.grr.tree import BranchNode, BranchStatus, BranchTree, SolutionRecord
from utils.grr.verify import SolutionVerdict, verify_solution
from utils.optimizers.run import run
from utils.optimizers.step_operator import StepOperator
from utils.parallel import parallel_map


@dataclass(frozen=True, eq=False)
class _Outcome:
    start: np.ndarray
    optimized: np.ndarray
    walk_capped: bool
    verdict: SolutionVerdict
    losses: Optional[Tuple[float, float]]
    children: List[BranchNode]


def _optimize_branch(node: BranchNode, game, op: StepOperator, cfg: GrrConfig) -> _Outcome:
    if node.direction is None:
        start, capped = np.array(node.params, dtype=float), False
    else:
        start, capped = apply_branch_step(node, game, op, cfg.branch_mode, cfg)
    traj = run(op, start, cfg.optimize_steps)
    verdict = verify_solution(game, op, traj.final, cfg.grad_tol, cfg.stability_tol, traj, cfg.cycle_window)
    losses = None
    children: List[BranchNode] = []
    if verdict.status is not BranchStatus.DIVERGED:
        losses = game.losses(traj.final)
        if node.depth < cfg.max_depth and verdict.spectral_radius > 1.0 + cfg.rebranch_tol:
            settled = BranchNode(id=node.id, params=node.params, depth=node.depth, optimized=traj.final)
            children = split_branch(settled, op, cfg)
    return _Outcome(start, traj.final, capped, verdict, losses, children)


def _duplicate_of(game, solutions: List[SolutionRecord], w: np.ndarray, radius: float) -> Optional[int]:
    strategies = game.strategies(w)
    for record in solutions:
        if np.linalg.norm(record.strategies - strategies) < radius:
            return record.node_id
    return None


def run_tree_search(game, op: StepOperator, cfg: GrrConfig, start=None) -> Tuple[List[SolutionRecord], BranchTree]:
    """
    Run the search.

    Args:
        game: Game whose joint gradient defines stationarity
        op: Optimizer used inside every branch
        cfg: Search settings
        start: Skip starting-point search and branch from this point

    Returns:
        (deduplicated solutions in discovery order, tree)
    """
    w0 = find_starting_point(game, op, cfg).values if start is None else np.asarray(start, dtype=float)
    tree = BranchTree(start=np.array(w0))
    root = tree.add(BranchNode(id=0, params=np.array(w0)))
    children = split_branch(root, op, cfg)
    if children:
        root.status = BranchStatus.BRANCHED
        root.start = np.array(w0)
        frontier = [tree.add(child) for child in children]
    else:
        logging.info("ℹ️ No stretching direction at the start; optimizing the root without branching")
        tree.root_fallback = True
        frontier = [root]

    solutions: List[SolutionRecord] = []
    bound = cfg.node_bound(game.dim)
    while frontier:
        outcomes = parallel_map(lambda n: _optimize_branch(n, game, op, cfg), frontier, cfg.threads)
        next_frontier = []
        for node, outcome in zip(frontier, outcomes):
            node.start = outcome.start
            node.optimized = outcome.optimized
            node.walk_capped = outcome.walk_capped
            node.status = outcome.verdict.status
            node.grad_norm = outcome.verdict.grad_norm
            node.residual = outcome.verdict.residual
            node.spectral_radius = outcome.verdict.spectral_radius
            node.losses = outcome.losses
            if node.status is BranchStatus.SOLUTION:
                duplicate = _duplicate_of(game, solutions, outcome.optimized, cfg.dedup_radius)
                if duplicate is None:
                    solutions.append(SolutionRecord(
                        node_id=node.id,
                        params=np.array(outcome.optimized),
                        strategies=game.strategies(outcome.optimized),
                        losses=outcome.losses,
                        grad_norm=outcome.verdict.grad_norm,
                        residual=outcome.verdict.residual,
                        spectrum=outcome.verdict.eigenvalues,
                        path=tree.path(node.id),
                    ))
                else:
                    node.duplicate_of = duplicate
            next_frontier.extend(tree.add(child) for child in outcome.children)
        frontier = next_frontier
    assert len(tree.nodes) <= bound, f"tree has {len(tree.nodes)} nodes, bound is {bound}"

    logging.info(
        f"✅ Tree search: {len(tree.nodes)} node(s), {tree.count(BranchStatus.SOLUTION)} solution branch(es), "
        f"{len(solutions)} distinct solution(s), {tree.count(BranchStatus.DIVERGED)} diverged"
    )
    return solutions, tree
