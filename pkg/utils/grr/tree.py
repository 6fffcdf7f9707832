"""Branch nodes, solution records and the serialized search tree."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np


class BranchStatus(str, Enum):
    PENDING = "pending"
    BRANCHED = "branched"
    OPTIMIZED = "optimized"
    SOLUTION = "solution"
    DIVERGED = "diverged"
    CYCLE_SUSPECTED = "cycle_suspected"


def _floats(values) -> Optional[List[float]]:
    return None if values is None else [float(v) for v in np.asarray(values).reshape(-1)]


def _complex_pairs(values) -> List[List[float]]:
    return [[float(np.real(v)), float(np.imag(v))] for v in values]


@dataclass
class BranchNode:
    """
    One branch of the search.

    `params` is the point the branch leaves from (the tuned start for the root, the
    parent's optimized point otherwise); `start` is where optimization began after the
    branch step and `optimized` where it ended.
    """
    id: int
    params: np.ndarray
    depth: int = 0
    parent: Optional[int] = None
    direction: Optional[np.ndarray] = None
    sign: int = 0
    exponent: Optional[float] = None
    stretch: Optional[float] = None
    status: BranchStatus = BranchStatus.PENDING
    start: Optional[np.ndarray] = None
    optimized: Optional[np.ndarray] = None
    losses: Optional[Tuple[float, float]] = None
    grad_norm: Optional[float] = None
    residual: Optional[float] = None
    spectral_radius: Optional[float] = None
    walk_capped: bool = False
    duplicate_of: Optional[int] = None
    children: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "id": self.id,
            "parent": self.parent,
            "depth": self.depth,
            "status": self.status.value,
            "sign": self.sign,
            "direction": _floats(self.direction),
            "exponent": self.exponent,
            "stretch": self.stretch,
            "params": _floats(self.params),
            "start": _floats(self.start),
            "optimized": _floats(self.optimized),
            "losses": None if self.losses is None else [float(v) for v in self.losses],
            "grad_norm": self.grad_norm,
            "residual": self.residual,
            "spectral_radius": self.spectral_radius,
            "walk_capped": self.walk_capped,
            "duplicate_of": self.duplicate_of,
            "children": list(self.children),
        }


@dataclass(frozen=True, eq=False)
class SolutionRecord:
    """
    A verified, deduplicated solution.

    Args:
        node_id: Branch that found it
        params: Joint parameters
        strategies: Displayed strategies (probabilities for logit games)
        losses: (L_A, L_B)
        grad_norm: Joint-gradient norm
        residual: Fixed-point residual of the optimizer, ||F(w) - w|| / alpha
        spectrum: Eigenvalues of the operator Jacobian
        path: Node ids from the root to the branch
    """
    node_id: int
    params: np.ndarray
    strategies: np.ndarray
    losses: Tuple[float, float]
    grad_norm: float
    residual: float
    spectrum: np.ndarray
    path: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {
            "node_id": self.node_id,
            "params": _floats(self.params),
            "strategies": _floats(self.strategies),
            "losses": [float(v) for v in self.losses],
            "grad_norm": float(self.grad_norm),
            "residual": float(self.residual),
            "spectrum": _complex_pairs(self.spectrum),
            "path": list(self.path),
        }


@dataclass
class BranchTree:
    nodes: List[BranchNode] = field(default_factory=list)
    start: Optional[np.ndarray] = None
    root_fallback: bool = False

    def add(self, node: BranchNode) -> BranchNode:
        node.id = len(self.nodes)
        self.nodes.append(node)
        if node.parent is not None:
            self.nodes[node.parent].children.append(node.id)
        return node

    def path(self, node_id: int) -> Tuple[int, ...]:
        ids = []
        current: Optional[int] = node_id
        while current is not None:
            ids.append(current)
            current = self.nodes[current].parent
        return tuple(reversed(ids))

    def count(self, status: BranchStatus) -> int:
        return sum(1 for node in self.nodes if node.status is status)

    def to_dict(self) -> Dict:
        return {
            "start": _floats(self.start),
            "root_fallback": self.root_fallback,
            "nodes": [node.to_dict() for node in self.nodes],
        }
