"""
Strict run configuration.

Every section is a frozen dataclass; unknown keys anywhere raise ConfigError naming the
dotted path, and values must match the type of the field's default.
"""
from dataclasses import MISSING, asdict, dataclass, field, fields, replace
from typing import Any, Dict, List, Optional, Tuple

from utils.constants import IPD_LOLA_ALPHA, IPD_LOLA_ETA, MAX_DEPTH
from utils.errors import ConfigError
from utils.grr.config import BranchMode, GrrConfig
from utils.lyapunov.directions import DirectionStrategy
from utils.lyapunov.tuning import ExponentObjective, ObjectiveKind
from utils.optimizers.registry import OPTIMIZERS


@dataclass(frozen=True)
class GameSection:
    name: str = "matching_pennies"
    params: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class OptimizerSection:
    name: str = "simsgd"
    alpha: float = 0.1
    eta: float = 0.0
    full_taylor: bool = False

    def __post_init__(self):
        if self.name not in OPTIMIZERS:
            raise ConfigError(f"optimizer.name must be one of {', '.join(OPTIMIZERS)}, got {self.name!r}")
        if not self.alpha > 0:
            raise ConfigError(f"optimizer.alpha must be positive, got {self.alpha}")
        if self.eta < 0:
            raise ConfigError(f"optimizer.eta must be non-negative, got {self.eta}")


@dataclass(frozen=True)
class LyapunovSection:
    k: int = 10
    strategy: str = "eigh_every"
    objective: str = "max"
    n: int = 1
    use_proxy: bool = False
    tune_steps: int = 0
    lr: float = 0.1

    def __post_init__(self):
        if self.k < 0:
            raise ConfigError(f"lyapunov.k must be non-negative, got {self.k}")
        if self.n < 1:
            raise ConfigError(f"lyapunov.n must be >= 1, got {self.n}")
        if self.tune_steps < 0 or self.lr < 0:
            raise ConfigError("lyapunov.tune_steps and lyapunov.lr must be non-negative")
        self.direction_strategy()
        self.exponent_objective()

    def direction_strategy(self) -> DirectionStrategy:
        return DirectionStrategy.parse(self.strategy)

    def exponent_objective(self) -> ExponentObjective:
        objective = ExponentObjective.parse(self.objective, self.use_proxy)
        if objective.kind is not ObjectiveKind.MAX and ":" not in self.objective:
            objective = replace(objective, n=self.n)
        return objective


@dataclass(frozen=True)
class GrrSection:
    branch_mode: str = BranchMode.SCALED_JUMP.value
    n_directions: int = 2
    max_depth: int = MAX_DEPTH
    optimize_steps: int = 500
    grad_tol: float = 1e-3
    stability_tol: float = 1e-3
    rebranch_tol: float = 1e-3
    dedup_radius: float = 0.05
    base_scale: float = 1.0
    lambda_floor: float = 0.1
    walk_step: float = 0.05
    walk_max: int = 200
    cycle_window: int = 50
    filter_directions: bool = True
    skip_tuning: bool = False

    def __post_init__(self):
        try:
            BranchMode(self.branch_mode)
        except ValueError:
            valid = ", ".join(m.value for m in BranchMode)
            raise ConfigError(f"grr.branch_mode must be one of {valid}, got {self.branch_mode!r}")


@dataclass(frozen=True)
class GridSection:
    box: List[float] = field(default_factory=lambda: [-4.0, 4.0, -4.0, 4.0])
    resolution: List[int] = field(default_factory=lambda: [5, 5])
    strategy: str = "max"

    def __post_init__(self):
        if len(self.box) != 4:
            raise ConfigError(f"grid.box must have 4 entries, got {len(self.box)}")
        if len(self.resolution) != 2 or any(int(r) != r or r < 0 for r in self.resolution):
            raise ConfigError(f"grid.resolution must be two non-negative integers, got {self.resolution}")
        if self.strategy != "max":
            DirectionStrategy.parse(self.strategy)

    def direction_strategy(self) -> Optional[DirectionStrategy]:
        return None if self.strategy == "max" else DirectionStrategy.parse(self.strategy)


@dataclass(frozen=True)
class ClassifySection:
    axis: Optional[List[float]] = None
    tol: float = 1e-6
    alpha_ratio: float = 0.1

    def __post_init__(self):
        object.__setattr__(self, "axis", _floats(self.axis, "classify.axis"))
        if not self.tol > 0 or self.alpha_ratio < 0:
            raise ConfigError("classify.tol must be positive and classify.alpha_ratio non-negative")


@dataclass(frozen=True)
class IpdTableSection:
    random_starts: int = 20
    lola_alpha: float = IPD_LOLA_ALPHA
    lola_eta: float = IPD_LOLA_ETA

    def __post_init__(self):
        if self.random_starts < 0:
            raise ConfigError(f"ipd_table.random_starts must be non-negative, got {self.random_starts}")


_SECTIONS = {
    "game": GameSection,
    "optimizer": OptimizerSection,
    "lyapunov": LyapunovSection,
    "grr": GrrSection,
    "grid": GridSection,
    "classify": ClassifySection,
    "ipd_table": IpdTableSection,
}


def _default_of(f):
    if f.default is not MISSING:
        return f.default
    if f.default_factory is not MISSING:
        return f.default_factory()
    return None


def _check_value(value: Any, default: Any, path: str) -> Any:
    if default is None:
        return value
    if isinstance(default, bool):
        if not isinstance(value, bool):
            raise ConfigError(f"{path} must be true or false, got {value!r}")
        return value
    if isinstance(default, int):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{path} must be an integer, got {value!r}")
        return value
    if isinstance(default, float):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{path} must be a number, got {value!r}")
        return float(value)
    if isinstance(default, str):
        if not isinstance(value, str):
            raise ConfigError(f"{path} must be a string, got {value!r}")
        return value
    if isinstance(default, list):
        if not isinstance(value, list):
            raise ConfigError(f"{path} must be a list, got {value!r}")
        return value
    if isinstance(default, dict):
        if not isinstance(value, dict):
            raise ConfigError(f"{path} must be an object, got {value!r}")
        return value
    return value


def _build(cls, data: Any, path: str):
    if data is None:
        return cls()
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must be an object, got {type(data).__name__}")
    known = {f.name: f for f in fields(cls)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise ConfigError("unknown configuration key(s): " + ", ".join(f"{path}.{k}" for k in unknown))
    kwargs = {name: _check_value(value, _default_of(known[name]), f"{path}.{name}") for name, value in data.items()}
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"{path}: {e}")


def _floats(value: Any, path: str) -> Optional[Tuple[float, ...]]:
    if value is None:
        return None
    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigError(f"{path} must be a non-empty list of numbers")
    out = []
    for v in value:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ConfigError(f"{path} must contain only numbers, got {v!r}")
        out.append(float(v))
    return tuple(out)


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a subcommand needs; identical config + seed gives identical artifacts.
    """
    game: GameSection = field(default_factory=GameSection)
    optimizer: OptimizerSection = field(default_factory=OptimizerSection)
    lyapunov: LyapunovSection = field(default_factory=LyapunovSection)
    grr: GrrSection = field(default_factory=GrrSection)
    grid: GridSection = field(default_factory=GridSection)
    classify: ClassifySection = field(default_factory=ClassifySection)
    ipd_table: IpdTableSection = field(default_factory=IpdTableSection)
    point: Optional[Tuple[float, ...]] = None
    output_dir: str = "out"
    seed: int = 0
    steps: int = 200
    threads: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "point", _floats(self.point, "point"))
        if self.steps < 0:
            raise ConfigError(f"steps must be non-negative, got {self.steps}")
        if self.threads is not None and (isinstance(self.threads, bool) or not isinstance(self.threads, int) or self.threads < 1):
            raise ConfigError(f"threads must be a positive integer, got {self.threads!r}")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("configuration must be a JSON object")
        top = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - top)
        if unknown:
            raise ConfigError("unknown configuration key(s): " + ", ".join(unknown))
        defaults = {f.name: _default_of(f) for f in fields(cls)}
        kwargs: Dict[str, Any] = {}
        for name, value in data.items():
            if name in _SECTIONS:
                kwargs[name] = _build(_SECTIONS[name], value, name)
            else:
                kwargs[name] = _check_value(value, defaults[name], name)
        return cls(**kwargs)

    def with_overrides(self, output_dir: Optional[str] = None, seed: Optional[int] = None, point=None, threads: Optional[int] = None) -> "RunConfig":
        """CLI flags win over file values."""
        changes: Dict[str, Any] = {}
        if output_dir is not None:
            changes["output_dir"] = str(output_dir)
        if seed is not None:
            changes["seed"] = int(seed)
        if point is not None:
            changes["point"] = point
        if threads is not None:
            changes["threads"] = threads
        return replace(self, **changes) if changes else self

    def grr_config(self, tune: bool = True) -> GrrConfig:
        g = self.grr
        tune_steps = 0 if (g.skip_tuning or not tune) else self.lyapunov.tune_steps
        return GrrConfig(
            objective=self.lyapunov.exponent_objective(),
            k=self.lyapunov.k,
            tune_steps=tune_steps,
            tune_lr=self.lyapunov.lr,
            branch_mode=BranchMode(g.branch_mode),
            n_directions=g.n_directions,
            max_depth=g.max_depth,
            optimize_steps=g.optimize_steps,
            grad_tol=g.grad_tol,
            stability_tol=g.stability_tol,
            rebranch_tol=g.rebranch_tol,
            dedup_radius=g.dedup_radius,
            base_scale=g.base_scale,
            lambda_floor=g.lambda_floor,
            walk_step=g.walk_step,
            walk_max=g.walk_max,
            cycle_window=g.cycle_window,
            filter_directions=g.filter_directions,
            seed=self.seed,
            init=self.point,
            threads=self.threads,
        )

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["point"] = None if self.point is None else list(self.point)
        return data
