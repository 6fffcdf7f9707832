"""
Hopf detection for planar families dz/dt = F(z, mu).

A complex pair alpha(mu) +- i beta(mu) of the state Jacobian must sit on the imaginary
axis at the crossing and move across it transversally. Criticality comes from simulating
just past the crossing on both sides: a small stable cycle on the alpha > 0 side means
supercritical, no such cycle means subcritical.
"""
import logging
import math
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from utils.bifurcation.verdict import BifurcationKind, BifurcationVerdict, Criticality
from utils.constants import HOPF_OFFSET_MU, HOPF_START_RADIUS, NORMAL_FORM_STEP

PlanarField = Callable[[np.ndarray, float], np.ndarray]

ESCAPE_RADIUS = 1.0
CYCLE_TIME = 400.0
CYCLE_DT = 0.05


def state_jacobian(F: PlanarField, mu: float, h: float = NORMAL_FORM_STEP, z0=None) -> np.ndarray:
    z0 = np.zeros(2) if z0 is None else np.asarray(z0, dtype=float)
    J = np.empty((2, 2))
    for j in range(2):
        e = np.zeros(2)
        e[j] = h
        J[:, j] = (np.asarray(F(z0 + e, mu)) - np.asarray(F(z0 - e, mu))) / (2 * h)
    return J


def planar_eigen(J: np.ndarray) -> Tuple[float, float, float]:
    """(alpha, beta, discriminant) from trace and determinant; beta is 0 for real pairs."""
    trace = J[0, 0] + J[1, 1]
    det = J[0, 0] * J[1, 1] - J[0, 1] * J[1, 0]
    disc = trace * trace - 4.0 * det
    beta = 0.5 * math.sqrt(-disc) if disc < 0 else 0.0
    return 0.5 * trace, beta, disc


def _rk4_step(F: PlanarField, z: np.ndarray, mu: float, dt: float) -> np.ndarray:
    k1 = np.asarray(F(z, mu))
    k2 = np.asarray(F(z + 0.5 * dt * k1, mu))
    k3 = np.asarray(F(z + 0.5 * dt * k2, mu))
    k4 = np.asarray(F(z + dt * k3, mu))
    return z + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)


def simulate_cycle(F: PlanarField, mu: float, radius: float = HOPF_START_RADIUS, total_time: float = CYCLE_TIME, dt: float = CYCLE_DT) -> Dict:
    """
    Simulate from (radius, 0) and report whether a bounded small cycle is left.

    Returns:
        {"cycle": bool, "escaped": bool, "radius": mean tail radius, "spread": tail max - min}
    """
    z = np.array([radius, 0.0])
    steps = int(round(total_time / dt))
    tail_start = int(0.8 * steps)
    tail = []
    for i in range(steps):
        z = _rk4_step(F, z, mu, dt)
        r = float(np.hypot(z[0], z[1]))
        if not math.isfinite(r) or r > ESCAPE_RADIUS:
            return {"cycle": False, "escaped": True, "radius": math.inf, "spread": math.inf}
        if i >= tail_start:
            tail.append(r)
    tail = np.array(tail)
    mean_r = float(tail.mean())
    spread = float(tail.max() - tail.min())
    # a cycle neither collapses onto the equilibrium nor keeps drifting
    cycle = mean_r > 1e-3 and spread < 0.1 * mean_r
    return {"cycle": bool(cycle), "escaped": False, "radius": mean_r, "spread": spread}


def classify_hopf_2d(
    F: PlanarField,
    tol: float = 1e-6,
    h: float = NORMAL_FORM_STEP,
    offset_mu: float = HOPF_OFFSET_MU,
    start_radius: float = HOPF_START_RADIUS,
    alpha_ratio: float = 0.0,
) -> BifurcationVerdict:
    """
    Classify a planar family at z = 0, mu = 0.

    Args:
        F: Callable (z, mu) -> dz/dt with z a length-2 array
        tol: Zero tolerance
        h: Finite-difference step in state and in mu
        offset_mu: Distance past the crossing for the criticality runs
        start_radius: Initial radius of the criticality trajectories
        alpha_ratio: Also accept |alpha(0)| <= alpha_ratio * beta(0) (weakly damped foci
            whose crossing sits at mu = -alpha(0) / alpha'(0))

    Returns:
        Hopf verdict with a = d alpha / d mu and b = -1 (super) or +1 (sub); NotHopf for
        real pairs or a failed transversality test; Hyperbolic for a focus off the axis
    """
    residual = float(np.linalg.norm(F(np.zeros(2), 0.0)))
    diagnostics: Dict = {"equilibrium_residual": residual}
    if residual > tol:
        diagnostics["reason"] = "origin is not an equilibrium"
        return BifurcationVerdict(BifurcationKind.NOT_HOPF, diagnostics=diagnostics)

    alpha0, beta0, disc = planar_eigen(state_jacobian(F, 0.0, h))
    diagnostics.update({"alpha": alpha0, "beta": beta0, "discriminant": disc})
    if disc >= 0 or beta0 <= tol:
        diagnostics["reason"] = "eigenvalues are real"
        return BifurcationVerdict(BifurcationKind.NOT_HOPF, diagnostics=diagnostics)
    if abs(alpha0) > max(tol, alpha_ratio * beta0):
        diagnostics["reason"] = "complex pair off the imaginary axis"
        return BifurcationVerdict(BifurcationKind.HYPERBOLIC, diagnostics=diagnostics)

    alpha_plus = planar_eigen(state_jacobian(F, h, h))[0]
    alpha_minus = planar_eigen(state_jacobian(F, -h, h))[0]
    a = (alpha_plus - alpha_minus) / (2 * h)
    diagnostics["d_alpha_d_mu"] = a
    if abs(a) <= tol:
        diagnostics["reason"] = "transversality fails"
        return BifurcationVerdict(BifurcationKind.NOT_HOPF, a, diagnostics=diagnostics)

    crossing = -alpha0 / a
    growing = 1 if a > 0 else -1
    unstable_side = simulate_cycle(F, crossing + growing * offset_mu, start_radius)
    stable_side = simulate_cycle(F, crossing - growing * offset_mu, start_radius)
    diagnostics.update({"crossing_mu": crossing, "unstable_side_orbit": unstable_side, "stable_side_orbit": stable_side})
    if unstable_side["cycle"] and not stable_side["cycle"]:
        criticality, b, side = Criticality.SUPER, -1.0, growing
        diagnostics["cycle_radius"] = unstable_side["radius"]
    else:
        criticality, b, side = Criticality.SUB, 1.0, -growing
    logging.debug(f"🔍 Hopf candidate: alpha'={a:.4g}, beta={beta0:.4g}, {criticality.value}critical")
    return BifurcationVerdict(BifurcationKind.HOPF, a, b, criticality, side, diagnostics)
