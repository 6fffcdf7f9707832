import json
from pathlib import Path

import pytest

from utils.config import RunConfig, debug_config_loading, load_config_file
from utils.errors import ConfigError
from utils.grr import BranchMode
from utils.lyapunov import ObjectiveKind

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def test_defaults():
    cfg = RunConfig.from_dict({})
    assert cfg.game.name == "matching_pennies"
    assert cfg.optimizer.name == "simsgd"
    assert cfg.point is None
    grr = cfg.grr_config()
    assert grr.branch_mode is BranchMode.SCALED_JUMP
    assert grr.k == cfg.lyapunov.k
    json.dumps(cfg.to_dict())


def test_sections_are_parsed():
    cfg = RunConfig.from_dict({
        "game": {"name": "mixed", "params": {"tau": 0.5}},
        "optimizer": {"name": "lola", "alpha": 1, "eta": 10},
        "lyapunov": {"k": 4, "objective": "sum", "n": 2, "tune_steps": 3},
        "grr": {"branch_mode": "walk_until_flip", "max_depth": 2, "skip_tuning": True},
        "point": [0.1, -0.2],
        "seed": 5,
    })
    assert cfg.optimizer.alpha == 1.0 and isinstance(cfg.optimizer.alpha, float)
    objective = cfg.lyapunov.exponent_objective()
    assert (objective.kind, objective.n) == (ObjectiveKind.SUM, 2)
    grr = cfg.grr_config()
    assert grr.tune_steps == 0
    assert grr.init == (0.1, -0.2)
    assert grr.seed == 5
    assert cfg.grr_config(tune=True).max_depth == 2


def test_explicit_objective_count_wins():
    cfg = RunConfig.from_dict({"lyapunov": {"objective": "min:3", "n": 1}})
    assert cfg.lyapunov.exponent_objective().n == 3


@pytest.mark.parametrize("data, fragment", [
    ({"bogus": 1}, "bogus"),
    ({"grr": {"depth": 2}}, "grr.depth"),
    ({"seed": "x"}, "seed"),
    ({"optimizer": {"alpha": True}}, "optimizer.alpha"),
    ({"optimizer": {"alpha": 0}}, "alpha"),
    ({"optimizer": {"name": "adam"}}, "adam"),
    ({"lyapunov": {"strategy": "sideways"}}, "sideways"),
    ({"grid": {"box": [0, 1, 2]}}, "grid.box"),
    ({"grid": {"resolution": [2, -1]}}, "grid.resolution"),
    ({"grr": {"branch_mode": "teleport"}}, "teleport"),
    ({"point": [1, "a"]}, "point"),
    ({"threads": 0}, "threads"),
    ({"game": []}, "game"),
])
def test_invalid_values_name_the_key(data, fragment):
    with pytest.raises(ConfigError, match=fragment):
        RunConfig.from_dict(data)


def test_overrides_win():
    cfg = RunConfig.from_dict({"seed": 1, "output_dir": "a"}).with_overrides(output_dir="b", seed=2, point=[0.0, 1.0], threads=3)
    assert (cfg.output_dir, cfg.seed, cfg.point, cfg.threads) == ("b", 2, (0.0, 1.0), 3)
    assert RunConfig().with_overrides() == RunConfig()


def test_load_explicit_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"seed": 9}), encoding="utf-8")
    assert load_config_file(str(path)) == {"seed": 9}


def test_load_explicit_failures(tmp_path, mocker):
    with pytest.raises(ConfigError, match="not found"):
        load_config_file(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{nope", encoding="utf-8")
    with pytest.raises(ConfigError, match="Invalid JSON"):
        load_config_file(str(broken))
    listing = tmp_path / "list.json"
    listing.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ConfigError, match="JSON object"):
        load_config_file(str(listing))
    mocker.patch("utils.config.config_loader.MAX_CONFIG_BYTES", 4)
    big = tmp_path / "big.json"
    big.write_text('{"seed": 1}', encoding="utf-8")
    with pytest.raises(ConfigError, match="too large"):
        load_config_file(str(big))


def test_discovery_skips_broken_candidates(tmp_path, mocker):
    broken = tmp_path / "broken.json"
    broken.write_text("{nope", encoding="utf-8")
    good = tmp_path / "good.json"
    good.write_text('{"seed": 4}', encoding="utf-8")
    mocker.patch("utils.config.config_loader.find_config_candidates", return_value=[tmp_path / "absent.json", broken, good])
    assert load_config_file() == {"seed": 4}


def test_discovery_without_candidates(tmp_path, mocker):
    mocker.patch("utils.config.config_loader.find_config_candidates", return_value=[tmp_path / "absent.json"])
    assert load_config_file() == {}


def test_debug_config_loading(tmp_path):
    path = tmp_path / "run.json"
    path.write_text('{"seed": 2, "steps": 3}', encoding="utf-8")
    info = debug_config_loading(str(path))
    assert info["candidates"][0] == str(path)
    assert info["loaded_from"] == str(path)
    assert info["config_keys"] == ["seed", "steps"]


@pytest.mark.parametrize("path", sorted(CONFIGS.glob("*.json")), ids=lambda p: p.name)
def test_shipped_configs_are_valid(path):
    cfg = RunConfig.from_dict(load_config_file(str(path)))
    assert cfg.grr_config().max_depth >= 1


def test_full_ipd_preset_uses_table_settings():
    grr = RunConfig.from_dict(load_config_file(str(CONFIGS / "ipd_table.json"))).grr_config()
    assert (grr.k, grr.objective.kind, grr.n_directions, grr.max_depth) == (0, ObjectiveKind.MAX, 10, 3)
