import json
import subprocess
import sys

import pytest

from bringcover import verify
from bringcover.cli import main
from bringcover.tracking import TrackingConfig


def test_verify_all_default_passes(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify-all", "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["status"] == "pass"
    assert len(report["checks"]) >= 12
    printed = capsys.readouterr().out
    assert "PASS" in printed


def test_report_schema():
    report = verify.run_checks(TrackingConfig(), only="cells")
    assert set(report) == {"version", "config", "checks", "status"}
    assert report["status"] in ("pass", "fail")
    names = [c["name"] for c in report["checks"]]
    assert names == sorted(names)
    for check in report["checks"]:
        assert set(check) == {"name", "status", "observed", "expected",
                              "anchor"}
        assert check["status"] in ("pass", "fail", "info")
        assert check["anchor"]
    gated = [c for c in report["checks"] if c["status"] != "info"]
    assert (report["status"] == "pass") == \
        all(c["status"] == "pass" for c in gated)
    json.dumps(report)  # must be serializable as-is


def test_only_filter():
    report = verify.run_checks(TrackingConfig(), only="cells")
    assert all(c["name"].startswith("cells.") for c in report["checks"])
    assert report["checks"]
    with pytest.raises(ValueError):
        verify.run_checks(TrackingConfig(), only="nonsense")


def test_cells_json_export(tmp_path, capsys):
    out = tmp_path / "cells.json"
    assert main(["cells", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    enums = payload["enumerations"]
    assert len(enums["n=5,k=0"]) == 12
    assert len(enums["n=5,k=1"]) == 30
    assert len(enums["n=5,k=2"]) == 15
    entry = enums["n=5,k=1"][0]
    assert set(entry) == {"text", "dimension", "orbit_size"}
    assert entry["text"].startswith("n=5; labels=(")
    capsys.readouterr()


def test_cover_json_export(tmp_path, capsys):
    out = tmp_path / "cover.json"
    assert main(["cover", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["base"]["euler_characteristic"] == -3
    assert payload["base"]["orientable"] is False
    assert payload["cover"] == {
        "faces": 24, "edges": 60, "vertices": 30,
        "components": 1, "orientable": True, "genus": 4,
    }
    from bringcover.cover import build_d
    from bringcover.dessins import Dessin

    assert Dessin.from_text(payload["dessin"]) == build_d()
    capsys.readouterr()


def test_dessins_json_export(tmp_path, capsys):
    out = tmp_path / "dessins.json"
    assert main(["dessins", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    from bringcover.dessins import Dessin

    named = {name: Dessin.from_text(text)
             for name, text in payload["dessins"].items()}
    assert set(named) == {"icosahedron", "I4", "union", "J", "D"}
    assert named["I4"].n_darts == 60
    assert named["union"].n_darts == named["J"].n_darts \
        == named["D"].n_darts == 120
    capsys.readouterr()


def test_monodromy_json_export(tmp_path, capsys):
    out = tmp_path / "monodromy.json"
    assert main(["monodromy", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    rep = payload["monodromy"]
    assert rep["cycle_types"] == [[5], [4, 1], [2, 1, 1, 1]]
    assert rep["group_order"] == 120
    assert rep["pi0"].startswith("(")
    for loop in rep["loops"].values():
        assert "lambda" in loop and "max_residual" in loop
    capsys.readouterr()


def test_monodromy_too_coarse_exits_1(capsys):
    assert main(["monodromy", "--steps", "4"]) == 1
    printed = capsys.readouterr().out
    assert "fail" in printed


@pytest.mark.parametrize("target,nodes,edges", [
    ("I4", 42, 60),
    ("D", 90, 120),
    ("union", 54, 120),
    ("J", 90, 120),
    ("sheet", 54, 120),
])
def test_export_counts(tmp_path, capsys, target, nodes, edges):
    out = tmp_path / f"{target}.dot"
    assert main(["export", "--target", target, "--path", str(out)]) == 0
    text = out.read_text()
    assert sum(1 for ln in text.splitlines() if "shape=circle" in ln) == nodes
    assert sum(1 for ln in text.splitlines() if " -- " in ln) == edges
    capsys.readouterr()


def test_export_deterministic(tmp_path, capsys):
    a = tmp_path / "a.dot"
    b = tmp_path / "b.dot"
    assert main(["export", "--target", "I4", "--path", str(a)]) == 0
    assert main(["export", "--target", "I4", "--path", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    capsys.readouterr()


def test_export_bad_path_exits_2(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["export", "--target", "I4",
              "--path", str(tmp_path / "no" / "dir" / "x.dot")])
    assert exc.value.code == 2
    capsys.readouterr()


def test_usage_error_exits_2(capsys):
    for argv in (["verify-all", "--only", "nonsense"],
                 ["export", "--target", "Z", "--path", "x"],
                 ["no-such-command"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        capsys.readouterr()


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "bringcover.cli", "--version"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip()


def test_export_deterministic_across_processes(tmp_path):
    paths = [tmp_path / "a.dot", tmp_path / "b.dot"]
    for path in paths:
        proc = subprocess.run(
            [sys.executable, "-m", "bringcover.cli", "export",
             "--target", "D", "--path", str(path)],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
    assert paths[0].read_bytes() == paths[1].read_bytes()
