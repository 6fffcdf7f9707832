import json
import math
from pathlib import Path

import numpy as np
import pytest

from utils.compute_hash import artifact_digests, compute_file_hash, compute_hash
from utils.constants import THREADS_ENV_VAR
from utils.emitters import csv_text, format_value, json_text, write_csv, write_json
from utils.errors import ArtifactWriteError
from utils.parallel import parallel_map, resolve_threads
from utils.safe_write_text import safe_write_text, write_artifact


def test_format_value():
    assert format_value(0.1) == "0.1"
    assert format_value(np.float64(1 / 3)) == repr(1 / 3)
    assert format_value(np.int64(7)) == "7"
    assert format_value(True) == "1"
    assert format_value(math.inf) == "inf"
    assert format_value(-math.inf) == "-inf"
    assert format_value(math.nan) == "nan"
    assert format_value("simsgd") == "simsgd"


def test_csv_text_layout():
    text = csv_text(["x", "y"], [(0.5, -math.inf), (1, "a,b")])
    assert text == 'x,y\n0.5,-inf\n1,"a,b"\n'
    with pytest.raises(ValueError):
        csv_text(["x", "y"], [(1.0,)])


def test_json_text_non_finite_and_numpy():
    data = json.loads(json_text({"v": np.array([1.0, math.nan]), "k": np.int32(3), "z": 1 + 2j}))
    assert data == {"v": [1.0, "nan"], "k": 3, "z": [1.0, 2.0]}
    assert json_text({}).endswith("\n")


def test_write_csv_creates_directories(tmp_path):
    path = write_csv(tmp_path / "nested" / "out.csv", ["a"], [(1.0,)])
    assert path.read_text(encoding="utf-8") == "a\n1.0\n"
    assert [p.name for p in path.parent.iterdir()] == ["out.csv"]


def test_write_json(tmp_path):
    path = write_json(tmp_path / "out.json", {"value": math.inf})
    assert json.loads(path.read_text(encoding="utf-8")) == {"value": "inf"}


def test_safe_write_text_rejects_bad_targets(tmp_path):
    warnings = []
    (tmp_path / "taken").mkdir()
    assert not safe_write_text(tmp_path / "taken", "x", warnings)
    assert not safe_write_text("plain-string", "x", warnings)
    assert not safe_write_text(tmp_path / "big.txt", "xx", warnings, max_file_size=1)
    assert len(warnings) == 3


def test_failed_write_keeps_previous_artifact(tmp_path, mocker):
    path = tmp_path / "out.csv"
    path.write_text("old\n", encoding="utf-8")
    mocker.patch("pathlib.Path.replace", side_effect=OSError("disk full"))
    with pytest.raises(ArtifactWriteError, match="disk full"):
        write_artifact(path, "new\n")
    assert path.read_text(encoding="utf-8") == "old\n"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["out.csv"]


def test_hashes(tmp_path):
    assert compute_hash("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
    assert compute_hash(b"abc") == compute_hash("abc")
    b = tmp_path / "b.csv"
    a = tmp_path / "a.csv"
    b.write_text("abc", encoding="utf-8")
    a.write_text("", encoding="utf-8")
    assert compute_file_hash(b) == compute_hash("abc")
    digests = artifact_digests([b, a])
    assert list(digests) == ["a.csv", "b.csv"]
    assert digests["b.csv"] == compute_hash("abc")


def test_parallel_map_preserves_order():
    items = list(range(20))
    assert parallel_map(lambda x: x * x, items, threads=4) == [x * x for x in items]
    assert parallel_map(lambda x: x, [], threads=4) == []


def test_resolve_threads(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    assert resolve_threads() == 1
    assert resolve_threads(0) == 1
    assert resolve_threads(3) == 3
    monkeypatch.setenv(THREADS_ENV_VAR, "5")
    assert resolve_threads() == 5
    monkeypatch.setenv(THREADS_ENV_VAR, "many")
    assert resolve_threads() == 1


def test_artifact_paths_are_paths(tmp_path):
    assert isinstance(write_csv(str(tmp_path / "s.csv"), ["a"], []), Path)
