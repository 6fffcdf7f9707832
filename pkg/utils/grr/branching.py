import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from utils.autodiff.derivatives import joint_gradient
from utils.errors import ConfigError
from utils.grr.config import BranchMode, GrrConfig
from utils.grr.tree import BranchNode
from utils.lyapunov.exponents import exponent_along, j_dagger, trajectory_jacobians
from utils.lyapunov.tuning import tune_starting_point
from utils.optimizers.step_operator import StepOperator
from utils.spectral.francis_qr import eig_general
from utils.spectral.queries import top_eigpairs_symmetric


def initial_point(game, cfg: GrrConfig) -> np.ndarray:
    if cfg.init is not None:
        w = np.array(cfg.init, dtype=float)
        if w.size != game.dim:
            raise ConfigError(f"grr.init has {w.size} entries, game {game.name} has {game.dim} parameters")
        return w
    return game.sample(np.random.default_rng(cfg.seed))


def find_starting_point(game, op: StepOperator, cfg: GrrConfig, w_init=None):
    """
    Tune the exponent objective from the configured (or random) initialization.

    Returns:
        JointParams of the tuned start
    """
    w0 = initial_point(game, cfg) if w_init is None else np.asarray(w_init, dtype=float)
    if cfg.tune_steps == 0:
        return game.joint(w0)
    w_star, _ = tune_starting_point(op, w0, cfg.k, cfg.objective, cfg.tune_steps, cfg.tune_lr)
    return game.joint(w_star)


def branch_directions(op: StepOperator, w, cfg: GrrConfig) -> List[Tuple[np.ndarray, float, float]]:
    """
    Candidate directions at a point as (direction, stretch, exponent), strongest first.

    Directions are the top-n eigenvectors of J_dagger over k steps from w, paired in
    order with the eigenvalue moduli of J(w) sorted largest first; stretch is the paired
    modulus. With filter_directions only directions whose modulus exceeds 1 + rebranch_tol
    are kept, so a strict sink (every |lambda(J)| < 1) yields nothing even when J is
    non-normal and J_dagger has eigenvalues above 1.
    """
    w = np.asarray(w, dtype=float).reshape(-1)
    _, jacobians, _ = trajectory_jacobians(op, w, cfg.k)
    if not jacobians:
        return []
    moduli = np.sort(np.abs(eig_general(jacobians[0]).eigenvalues))[::-1]
    jd = j_dagger(jacobians, w.size)
    kept = []
    for modulus, (_, d) in zip(moduli, top_eigpairs_symmetric(jd, min(cfg.n_directions, w.size))):
        if cfg.filter_directions and modulus <= 1.0 + cfg.rebranch_tol:
            break
        kept.append((d, float(modulus), exponent_along(jacobians, d)))
    return kept


def split_branch(node: BranchNode, op: StepOperator, cfg: GrrConfig) -> List[BranchNode]:
    """
    Children of a node: two signed branches per qualifying direction.

    The origin is the node's optimized point when it has one. Children carry id -1
    until the tree assigns them.
    """
    origin = node.optimized if node.optimized is not None else node.params
    children = []
    for d, stretch, exponent in branch_directions(op, origin, cfg):
        for sign in (1, -1):
            children.append(BranchNode(
                id=-1,
                params=np.array(origin, dtype=float),
                depth=node.depth + 1,
                parent=node.id,
                direction=d,
                sign=sign,
                exponent=exponent,
                stretch=stretch,
            ))
    logging.debug(f"🔍 node {node.id}: {len(children)} child branch(es)")
    return children


def _flip_sign(game, w: np.ndarray, d: np.ndarray) -> float:
    return float(np.sign(d @ joint_gradient(game, w)))


def apply_branch_step(node: BranchNode, game, op: StepOperator, mode: BranchMode, cfg: GrrConfig) -> Tuple[np.ndarray, bool]:
    """
    Move from the node's origin along its signed direction.

    ScaledJump: w + sign * s * max(exponent, lambda_floor) * d.
    WalkUntilFlip: step by beta while the sign of d . g(w) matches its value at the
    branch point, up to walk_max steps. A stationary branch point has no sign, so the
    sign after the first step is used instead.

    Returns:
        (new point, capped) where capped means the walk never saw the sign flip
    """
    if node.direction is None:
        raise ValueError(f"node {node.id} has no branch direction")
    w = np.array(node.params, dtype=float)
    d = np.asarray(node.direction, dtype=float)
    sign = float(node.sign or 1)
    if BranchMode(mode) is BranchMode.SCALED_JUMP:
        exponent = node.exponent if node.exponent is not None and math.isfinite(node.exponent) else 0.0
        return w + sign * cfg.base_scale * max(exponent, cfg.lambda_floor) * d, False
    step = sign * cfg.walk_step * d
    initial = _flip_sign(game, w, d)
    if initial == 0.0:
        w = w + step
        initial = _flip_sign(game, w, d)
    for _ in range(cfg.walk_max):
        w = w + step
        if _flip_sign(game, w, d) != initial:
            return w, False
    logging.debug(f"⚠️ node {node.id}: walk hit {cfg.walk_max} steps without crossing")
    return w, True
