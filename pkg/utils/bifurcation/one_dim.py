"""
Saddle-node and pitchfork classification of scalar families du/dt = f(u, mu) at (0, 0).

Normal forms: f = a*mu + b*u^2 (saddle-node, a = f_mu, b = f_uu / 2) and, for fields
odd in u, f = a*mu*u + b*u^3 (pitchfork, a = f_umu, b = f_uuu / 6). Equilibria live on
the side sign(mu) = -sign(a * b).
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from utils.bifurcation.verdict import BifurcationKind, BifurcationVerdict, Criticality
from utils.constants import NEWTON_MAX_ITER, NORMAL_FORM_STEP, THIRD_DERIVATIVE_STEP
from utils.errors import ConfigError

ODD_SAMPLES = (1e-3, 1e-2, 5e-2)


@dataclass(frozen=True)
class ParamField1D:
    """
    Scalar vector field f(u, mu).

    Args:
        f: Callable (u, mu) -> float
        smoothness: Differentiability class hint (>= 2)
    """
    f: Callable[[float, float], float]
    smoothness: int = 3

    def __post_init__(self):
        if self.smoothness < 2:
            raise ConfigError(f"fields must be at least C^2, got smoothness {self.smoothness}")

    def __call__(self, u: float, mu: float) -> float:
        return float(self.f(u, mu))

    def scaled(self, c: float) -> "ParamField1D":
        return ParamField1D(lambda u, mu: c * self.f(u, mu), self.smoothness)


def _third_u(field: ParamField1D, step: float) -> float:
    f = field
    return (f(2 * step, 0.0) - 2 * f(step, 0.0) + 2 * f(-step, 0.0) - f(-2 * step, 0.0)) / (2 * step ** 3)


def stencil_derivatives(field: ParamField1D, h: float = NORMAL_FORM_STEP, h3: float = THIRD_DERIVATIVE_STEP) -> Dict[str, float]:
    """Central-difference derivatives at (0, 0); f_uuu uses Richardson refinement on a wider step."""
    f = field
    f0 = f(0.0, 0.0)
    fp, fm = f(h, 0.0), f(-h, 0.0)
    coarse, fine = _third_u(field, h3), _third_u(field, h3 / 2)
    return {
        "f": f0,
        "f_u": (fp - fm) / (2 * h),
        "f_mu": (f(0.0, h) - f(0.0, -h)) / (2 * h),
        "f_uu": (fp - 2 * f0 + fm) / h ** 2,
        "f_umu": (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h ** 2),
        "f_uuu": (4 * fine - coarse) / 3,
    }


def odd_residual(field: ParamField1D, samples=ODD_SAMPLES) -> float:
    return max(abs(field(-u, 0.0) + field(u, 0.0)) for u in samples)


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def classify_1d(field: ParamField1D, tol: float = 1e-6) -> BifurcationVerdict:
    """
    Classify the field at (0, 0).

    Args:
        field: Scalar family recentered so the candidate is at the origin
        tol: Zero tolerance; |a| or |b| within 10 * tol is a tie and yields Degenerate

    Returns:
        BifurcationVerdict
    """
    d = stencil_derivatives(field)
    diagnostics: Dict = {"derivatives": d}
    if abs(d["f"]) > tol or abs(d["f_u"]) > tol:
        diagnostics["reason"] = "not a non-hyperbolic equilibrium"
        return BifurcationVerdict(BifurcationKind.HYPERBOLIC, diagnostics=diagnostics)

    residual = odd_residual(field)
    diagnostics["odd_residual"] = residual
    if residual <= tol:
        kind, a, b = BifurcationKind.PITCHFORK, d["f_umu"], d["f_uuu"] / 6.0
    else:
        kind, a, b = BifurcationKind.SADDLE_NODE, d["f_mu"], d["f_uu"] / 2.0

    for name, value in (("a", a), ("b", b)):
        if abs(value) <= 10 * tol:
            diagnostics["reason"] = f"{name}={value:.3g} vanishes" if abs(value) <= tol else f"{name}={value:.3g} within 10x tol"
            diagnostics["candidate"] = kind.value
            return BifurcationVerdict(BifurcationKind.DEGENERATE, a, b, diagnostics=diagnostics)

    side = -_sign(a * b)
    criticality = Criticality.NA
    if kind is BifurcationKind.PITCHFORK:
        criticality = Criticality.SUPER if b < 0 else Criticality.SUB
    return BifurcationVerdict(kind, a, b, criticality, side, diagnostics)


@dataclass(frozen=True)
class Equilibrium:
    u: float
    stable: bool
    slope: float


@dataclass(frozen=True)
class EquilibriumBranches:
    """Roots at one mu, ascending, plus flags for predictors Newton could not resolve."""
    mu: float
    equilibria: Tuple[Equilibrium, ...]
    flags: Tuple[str, ...] = ()

    @property
    def roots(self) -> List[float]:
        return [e.u for e in self.equilibria]


def _slope(field: ParamField1D, u: float, mu: float, h: float = NORMAL_FORM_STEP) -> float:
    return (field(u + h, mu) - field(u - h, mu)) / (2 * h)


def newton_root(field: ParamField1D, u0: float, mu: float, max_iter: int = NEWTON_MAX_ITER, xtol: float = 1e-14) -> Optional[float]:
    """Newton on u -> f(u, mu); None when it does not converge."""
    u = float(u0)
    for _ in range(max_iter):
        value = field(u, mu)
        slope = _slope(field, u, mu)
        if value == 0.0:
            return u
        if slope == 0.0 or not math.isfinite(slope):
            return None
        step = value / slope
        u -= step
        if not math.isfinite(u):
            return None
        if abs(step) <= xtol * max(1.0, abs(u)):
            return u
    return None


def equilibrium_branches(field: ParamField1D, mu: float, verdict: Optional[BifurcationVerdict] = None, tol: float = 1e-6) -> EquilibriumBranches:
    """
    Continue the equilibria near the origin to parameter mu.

    Newton starts from the normal-form predictors +-sqrt(|a mu / b|) (and 0 for a
    pitchfork). Roots farther than four predictor lengths from the origin are not part
    of the local branch and are dropped with a flag, as are predictors Newton cannot resolve.
    """
    verdict = verdict or classify_1d(field, tol)
    if verdict.kind not in (BifurcationKind.SADDLE_NODE, BifurcationKind.PITCHFORK):
        raise ConfigError(f"equilibrium branches need a saddle-node or pitchfork, got {verdict.kind.value}")
    reach = math.sqrt(abs(verdict.a * mu / verdict.b))
    seeds = [reach, -reach] if verdict.kind is BifurcationKind.SADDLE_NODE else [0.0, reach, -reach]
    radius = 4.0 * max(reach, 1e-12)
    roots: List[float] = []
    flags: List[str] = []
    for seed in seeds:
        root = newton_root(field, seed, mu)
        if root is None:
            flags.append(f"newton did not converge from {seed:.6g}")
            continue
        if abs(root) > radius:
            flags.append(f"root {root:.6g} from {seed:.6g} left the local branch")
            continue
        if any(abs(root - r) <= 1e-9 * max(1.0, abs(r)) for r in roots):
            continue
        roots.append(root)
    equilibria = []
    for root in sorted(roots):
        slope = _slope(field, root, mu)
        equilibria.append(Equilibrium(root, slope < 0, slope))
    if flags:
        logging.debug(f"⚠️ equilibrium branches at mu={mu}: {'; '.join(flags)}")
    return EquilibriumBranches(float(mu), tuple(equilibria), tuple(flags))


def observed_side(field: ParamField1D, verdict: BifurcationVerdict, mu: float = 1e-2) -> int:
    """Sign of mu where the nontrivial equilibria actually appear (0 if neither or both)."""
    minimum = 2 if verdict.kind is BifurcationKind.SADDLE_NODE else 3
    found = {s: len(equilibrium_branches(field, s * mu, verdict).equilibria) >= minimum for s in (1, -1)}
    if found[1] == found[-1]:
        return 0
    return 1 if found[1] else -1
