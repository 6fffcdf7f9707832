"""
Bridges from a game point to the normal-form classifiers.

The optimizer follows the gradient flow dw/dt = -g(w), so both reductions use -g:
  1-D: f(u, mu) = -axis . g(c + u * axis + mu * axis_perp), recentered onto a fold
  2-D: F(z, mu) = -E^T g(c + E z) + mu * z on the top two stretch directions E,
       recentered onto a nearby equilibrium
"""
import logging
from typing import Optional, Tuple

import numpy as np

from utils.autodiff.derivatives import joint_gradient
from utils.bifurcation.hopf import classify_hopf_2d
from utils.bifurcation.one_dim import ParamField1D, classify_1d
from utils.bifurcation.verdict import BifurcationKind, BifurcationVerdict
from utils.constants import NEWTON_MAX_ITER, NORMAL_FORM_STEP
from utils.lyapunov.directions import unit
from utils.spectral.queries import top_eigpairs_symmetric

RECENTER_RADIUS = 1.0


def stretch_axes(op, w) -> np.ndarray:
    """Top two eigenvectors of J^T J at w, as columns."""
    J = op.jac(w)
    pairs = top_eigpairs_symmetric(J.T @ J, 2)
    return np.column_stack([v for _, v in pairs])


def _perpendicular(axis: np.ndarray, axes: np.ndarray) -> np.ndarray:
    for candidate in axes.T:
        v = candidate - (candidate @ axis) * axis
        if np.linalg.norm(v) > 1e-8:
            return unit(v)
    v = np.zeros_like(axis)
    v[int(np.argmin(np.abs(axis)))] = 1.0
    return unit(v - (v @ axis) * axis)


def _newton(G, x0: np.ndarray, h: float = NORMAL_FORM_STEP, max_iter: int = NEWTON_MAX_ITER, radius: float = RECENTER_RADIUS) -> Optional[np.ndarray]:
    """Newton with a finite-difference Jacobian; None if singular, divergent or too far away."""
    x = np.array(x0, dtype=float)
    for _ in range(max_iter):
        value = np.asarray(G(x), dtype=float)
        J = np.empty((value.size, x.size))
        for j in range(x.size):
            e = np.zeros(x.size)
            e[j] = h
            J[:, j] = (np.asarray(G(x + e)) - np.asarray(G(x - e))) / (2 * h)
        det = np.linalg.det(J)
        if not np.isfinite(det) or abs(det) < 1e-12:
            return None
        step = np.linalg.solve(J, value)
        x = x - step
        if not np.all(np.isfinite(x)) or np.linalg.norm(x - x0) > radius:
            return None
        if np.linalg.norm(step) < 1e-11:
            return x
    return None


def reduce_1d(game, w: np.ndarray, axis: np.ndarray, perp: np.ndarray) -> Tuple[ParamField1D, np.ndarray]:
    """Scalar family along `axis` with mu shifting along `perp`, recentered on a fold when one is near."""
    def f_at(center):
        return lambda u, mu: -float(axis @ joint_gradient(game, center + u * axis + mu * perp))

    raw = ParamField1D(f_at(w))
    h = NORMAL_FORM_STEP

    def fold(x):
        u, mu = x
        return [raw(u, mu), (raw(u + h, mu) - raw(u - h, mu)) / (2 * h)]

    found = _newton(fold, np.zeros(2))
    if found is None:
        return raw, w
    center = w + found[0] * axis + found[1] * perp
    logging.debug(f"🔍 1-D reduction recentered by {found.tolist()} onto a fold")
    return ParamField1D(f_at(center)), center


def reduce_2d(game, w: np.ndarray, axes: np.ndarray):
    """Planar family on span(axes) unfolded by mu * z, recentered on a nearby equilibrium."""
    def projected(center):
        return lambda z: -axes.T @ joint_gradient(game, center + axes @ np.asarray(z, dtype=float))

    found = _newton(projected(w), np.zeros(2))
    center = w if found is None else w + axes @ found
    flow = projected(center)
    return (lambda z, mu: flow(z) + mu * np.asarray(z, dtype=float)), center


def classify_game_point(game, op, w, axis=None, tol: float = 1e-6, alpha_ratio: float = 0.1) -> BifurcationVerdict:
    """
    Classify a candidate branch point of a game.

    Args:
        game: Game providing the joint gradient
        op: Operator whose Jacobian supplies the stretch directions
        w: Candidate point
        axis: Direction of the 1-D reduction (defaults to the top stretch direction)
        tol: Zero tolerance passed to both classifiers
        alpha_ratio: Weak-focus allowance for the Hopf test

    Returns:
        The strongest verdict; both reductions are recorded in diagnostics
    """
    w = np.asarray(getattr(w, "values", w), dtype=float).reshape(-1)
    axes = stretch_axes(op, w)
    axis = axes[:, 0] if axis is None else unit(np.asarray(axis, dtype=float))
    perp = _perpendicular(axis, axes)

    field, center_1d = reduce_1d(game, w, axis, perp)
    one_dim = classify_1d(field, tol)
    planar, center_2d = reduce_2d(game, w, axes)
    two_dim = classify_hopf_2d(planar, tol, alpha_ratio=alpha_ratio)

    best = max((one_dim, two_dim), key=lambda v: v.strength)
    diagnostics = dict(best.diagnostics)
    diagnostics["reductions"] = {
        "one_dim": {**one_dim.to_dict(), "center": center_1d.tolist()},
        "two_dim": {**two_dim.to_dict(), "center": center_2d.tolist()},
    }
    diagnostics["axis"] = axis.tolist()
    logging.info(f"ℹ️ Game point verdict: {best.kind.value} (1-D: {one_dim.kind.value}, 2-D: {two_dim.kind.value})")
    return BifurcationVerdict(best.kind, best.a, best.b, best.criticality, best.side, diagnostics)
