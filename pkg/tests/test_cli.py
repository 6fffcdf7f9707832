import json
import sys
from pathlib import Path

import numpy as np
import pytest

from ridgewalk import EXIT_CONFIG, EXIT_IO, EXIT_NUMERIC, EXIT_OK, main, parse_point
from utils.errors import NumericalError

pytestmark = pytest.mark.usefixtures("restore_logging")

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def _run(tmp_path, command, config=None, *extra, out="out"):
    cfg_path = tmp_path / f"{command}.json"
    cfg_path.write_text(json.dumps(config or {}), encoding="utf-8")
    out_dir = tmp_path / out
    code = main([command, "--config", str(cfg_path), "--output-dir", str(out_dir), "-q", *extra])
    return code, out_dir


def _lines(path):
    return path.read_text(encoding="utf-8").splitlines()


def test_spectrum_writes_table_and_summary(tmp_path):
    code, out = _run(tmp_path, "spectrum", {}, "--point", "0,0")
    assert code == EXIT_OK
    lines = _lines(out / "spectrum.csv")
    assert lines[0] == "matrix,re,im"
    assert len(lines) == 5
    summary = json.loads((out / "spectrum_summary.json").read_text(encoding="utf-8"))
    assert set(summary) == {"subcommand", "version", "config", "artifacts", "sha256", "results"}
    assert summary["subcommand"] == "spectrum"
    assert summary["config"]["point"] == [0.0, 0.0]
    assert list(summary["sha256"]) == ["spectrum.csv"]


def test_config_errors_exit_with_2(tmp_path):
    assert _run(tmp_path, "spectrum", {"bogus": 1}, "--point", "0,0")[0] == EXIT_CONFIG
    assert _run(tmp_path, "spectrum", {})[0] == EXIT_CONFIG
    assert _run(tmp_path, "heatmap", {"game": {"name": "ipd"}})[0] == EXIT_CONFIG
    assert _run(tmp_path, "spectrum", {"game": {"name": "chess"}}, "--point", "0,0")[0] == EXIT_CONFIG
    assert main(["spectrum", "--config", str(tmp_path / "missing.json")]) == EXIT_CONFIG


def test_quiet_and_debug_conflict(tmp_path):
    assert main(["spectrum", "--quiet", "--debug", "--point", "0,0"]) == EXIT_CONFIG


def test_numerical_failure_exits_with_3(tmp_path, mocker):
    mocker.patch("utils.commands.spectrum.eig_general", side_effect=NumericalError("no convergence"))
    assert _run(tmp_path, "spectrum", {}, "--point", "0,0")[0] == EXIT_NUMERIC


def test_write_failure_exits_with_4(tmp_path, mocker):
    mocker.patch.object(sys.modules["utils.safe_write_text.safe_write_text"], "safe_write_text", return_value=False)
    assert _run(tmp_path, "spectrum", {}, "--point", "0,0")[0] == EXIT_IO


def test_bad_point_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        main(["spectrum", "--point", "a,b"])
    assert parse_point("[1, 2.5]") == [1.0, 2.5]
    assert parse_point(" 0.1,-0.3 ") == [0.1, -0.3]


def test_phase_portrait_rows(tmp_path):
    config = {"grid": {"box": [-1, 1, -1, 1], "resolution": [2, 2]}, "steps": 3, "optimizer": {"alpha": 0.5, "eta": 1.0}}
    code, out = _run(tmp_path, "phase-portrait", config)
    assert code == EXIT_OK
    lines = _lines(out / "phase_portrait.csv")
    assert lines[0] == "optimizer,traj_id,step,p1,p2"
    assert len(lines) == 1 + 2 * 4 * 4
    assert {line.split(",")[0] for line in lines[1:]} == {"simsgd", "lola"}


def test_tune_start_history(tmp_path):
    config = {"lyapunov": {"k": 3, "tune_steps": 2, "lr": 0.1}}
    code, out = _run(tmp_path, "tune-start", config, "--point", "0.5,-0.5")
    assert code == EXIT_OK
    assert len(_lines(out / "tune_history.csv")) == 4
    result = json.loads((out / "tune_start.json").read_text(encoding="utf-8"))
    assert result["w_init"] == [0.5, -0.5]
    assert result["k"] == 3


def test_grr_on_two_well(tmp_path):
    config = {"game": {"name": "two_well"}, "lyapunov": {"k": 5}}
    code, out = _run(tmp_path, "grr", config, "--point", "0,0")
    assert code == EXIT_OK
    assert len(_lines(out / "grr_solutions.csv")) == 3
    tree = json.loads((out / "grr_tree.json").read_text(encoding="utf-8"))
    assert len(tree["solutions"]) == 2
    summary = json.loads((out / "grr_summary.json").read_text(encoding="utf-8"))
    assert summary["results"]["solutions"] == 2


def test_classify_minimum(tmp_path):
    code, out = _run(tmp_path, "classify", {"game": {"name": "two_well"}}, "--point", "1,0")
    assert code == EXIT_OK
    verdict = json.loads((out / "classify.json").read_text(encoding="utf-8"))["verdict"]
    assert verdict["kind"] == "hyperbolic"


def test_heatmap_is_identical_across_thread_counts(tmp_path):
    config = {"grid": {"box": [-1, 1, -1, 1], "resolution": [3, 3]}, "lyapunov": {"k": 3}}
    code1, serial = _run(tmp_path, "heatmap", config, "--threads", "1", out="serial")
    code2, threaded = _run(tmp_path, "heatmap", config, "--threads", "3", out="threaded")
    assert code1 == code2 == EXIT_OK
    assert (serial / "heatmap.csv").read_bytes() == (threaded / "heatmap.csv").read_bytes()
    assert len(_lines(serial / "heatmap.csv")) == 10


@pytest.mark.slow
def test_ipd_table_on_small_ipd(tmp_path):
    config = {
        "game": {"name": "small_ipd"},
        "lyapunov": {"k": 2},
        "grr": {"max_depth": 1, "optimize_steps": 50},
        "ipd_table": {"random_starts": 2},
    }
    code, out = _run(tmp_path, "ipd-table", config, "--point", "0,0")
    assert code == EXIT_OK
    lines = _lines(out / "ipd_table.csv")
    assert lines[0] == "method,n_solutions,min_loss_a,max_loss_a,min_loss_b,max_loss_b"
    assert [line.split(",")[0] for line in lines[1:]] == ["grr_simsgd", "grr_lola", "random_init_simsgd", "untuned_branch"]


def test_rerun_reproduces_every_artifact_bytewise(tmp_path):
    config = {"game": {"name": "two_well"}, "lyapunov": {"k": 5}, "seed": 3}
    code, out = _run(tmp_path, "grr", config, "--point", "0,0")
    assert code == EXIT_OK
    first = {p.name: p.read_bytes() for p in sorted(out.iterdir())}
    assert set(first) == {"grr_tree.json", "grr_solutions.csv", "grr_summary.json"}
    assert _run(tmp_path, "grr", config, "--point", "0,0")[0] == EXIT_OK
    assert {p.name: p.read_bytes() for p in sorted(out.iterdir())} == first


@pytest.mark.slow
def test_shipped_mixed_config_recovers_center_and_cooperation(tmp_path):
    out = tmp_path / "mixed"
    assert main(["grr", "--config", str(CONFIGS / "mixed_grr.json"), "--output-dir", str(out), "-q"]) == EXIT_OK
    tree = json.loads((out / "grr_tree.json").read_text(encoding="utf-8"))
    assert tree["optimizer"]["name"] == "lola"
    strategies = np.array([s["strategies"] for s in tree["solutions"]])
    assert len(strategies) >= 2
    assert np.min(np.linalg.norm(strategies - 0.5, axis=1)) < 0.05
    assert np.any(np.all(strategies > 0.9, axis=1))


@pytest.mark.slow
@pytest.mark.reproduction
def test_shipped_ipd_table_reproduces_diversity(tmp_path):
    out = tmp_path / "ipd"
    assert main(["ipd-table", "--config", str(CONFIGS / "ipd_table.json"), "--output-dir", str(out), "-q"]) == EXIT_OK
    rows = {line.split(",")[0]: [float(v) for v in line.split(",")[1:]] for line in _lines(out / "ipd_table.csv")[1:]}
    for method in ("grr_simsgd", "grr_lola"):
        _, low, high, _, _ = rows[method]
        assert low <= 1.1 and high >= 1.9
    _, low, high, _, _ = rows["random_init_simsgd"]
    assert 1.9 <= low <= high <= 2.1
    count, low, high, _, _ = rows["untuned_branch"]
    assert count >= 1 and high - low <= 0.2
