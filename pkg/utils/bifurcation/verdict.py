from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict


class BifurcationKind(str, Enum):
    SADDLE_NODE = "saddle_node"
    PITCHFORK = "pitchfork"
    HOPF = "hopf"
    HYPERBOLIC = "hyperbolic"
    DEGENERATE = "degenerate"
    NOT_HOPF = "not_hopf"


class Criticality(str, Enum):
    SUPER = "super"
    SUB = "sub"
    NA = "na"


# strongest verdict wins when several reductions are classified
KIND_PRECEDENCE = {
    BifurcationKind.HOPF: 5,
    BifurcationKind.PITCHFORK: 4,
    BifurcationKind.SADDLE_NODE: 3,
    BifurcationKind.DEGENERATE: 2,
    BifurcationKind.HYPERBOLIC: 1,
    BifurcationKind.NOT_HOPF: 0,
}

# odd symmetry f(-u, mu) = -f(u, mu) is what the pitchfork test checks
SYMMETRY_CONVENTION = "odd"


@dataclass(frozen=True)
class BifurcationVerdict:
    """
    Args:
        kind: Verdict tag
        a: Unfolding coefficient (f_mu, f_umu or d alpha / d mu)
        b: Nonlinear coefficient (f_uu / 2, f_uuu / 6, or -1 / +1 for Hopf criticality)
        criticality: Super / Sub for pitchfork and Hopf, NA otherwise
        side: Sign of mu carrying the equilibria or the cycle (0 when not applicable)
        diagnostics: Sampled values and notes behind the verdict
    """
    kind: BifurcationKind
    a: float = 0.0
    b: float = 0.0
    criticality: Criticality = Criticality.NA
    side: int = 0
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    @property
    def strength(self) -> int:
        return KIND_PRECEDENCE[self.kind]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "a": float(self.a),
            "b": float(self.b),
            "criticality": self.criticality.value,
            "side": int(self.side),
            "symmetry_convention": SYMMETRY_CONVENTION,
            "diagnostics": _plain(self.diagnostics),
        }


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return value
    try:
        return float(value)
    except (TypeError, ValueError):
        return str(value)
