import json
from pathlib import Path

import pytest

from conftest import NON_PLANAR, TREFOIL
from knotcosmetic.cli import render_text, run

SAMPLE = Path(__file__).resolve().parent.parent / "data" / "census_sample.csv"


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_invariants_from_pd_text(capsys):
    assert run(["invariants", "--pd", TREFOIL]) == 0
    assert _json(capsys)["v3"] == 1


def test_invariants_from_file(tmp_path, capsys):
    path = tmp_path / "trefoil.pd"
    path.write_text(TREFOIL + "\n", encoding="utf-8")
    assert run(["invariants", str(path)]) == 0
    assert _json(capsys)["d2V1"] == "-6/1"


def test_unknot_flag(capsys):
    assert run(["invariants", "--unknot"]) == 0
    out = _json(capsys)
    assert (out["a2"], out["v3"]) == (0, 0)


def test_computation_errors_exit_1(capsys):
    assert run(["invariants", "--pd", NON_PLANAR]) == 1
    assert "NonPlanarDiagram" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["invariants"],
    ["slopes"],
    ["invariants", "--pd", TREFOIL, "somefile.pd"],
])
def test_usage_errors_exit_2(argv):
    assert run(argv) == 2


def test_verdict_with_tau(capsys):
    assert run(["verdict", "--unknot", "--tau", "2"]) == 0
    out = _json(capsys)
    assert out["status"] == "OBSTRUCTED_TAU"
    assert out["witness"] == {"quantity": "tau", "value": "2"}


def test_twobridge_genus3_family(capsys):
    assert run(["twobridge", "--conway", "3,1,-3,3,1,-3"]) == 0
    out = _json(capsys)
    assert (out["a2"], out["v3"], out["genus"]) == (0, -3, 3)
    assert out["verdict"]["status"] == "OBSTRUCTED_JONES"


def test_twobridge_diagram_cross_check(capsys):
    assert run(["twobridge", "--conway", "1,1,-2,1", "--diagram", "--tau", "0"]) == 0
    out = _json(capsys)
    assert out["diagram"]["agrees"] is True
    assert out["verdict"]["status"] == "INCONCLUSIVE"


def test_whitehead(capsys):
    assert run(["whitehead", "--twist", "2", "--diagram"]) == 0
    out = _json(capsys)
    assert (out["a2"], out["v3"]) == (-2, 1)
    assert out["alexander"] == "-2*t + 5 - 2*t^-1"
    assert out["diagram"]["agrees"] is True


def test_whitehead_diagram_needs_unknot_companion():
    assert run(["whitehead", "--twist", "1", "--companion-a2", "2", "--diagram"]) == 2


def test_twist(capsys):
    assert run(["twist", "-1"]) == 0
    out = _json(capsys)
    assert out["invariants"]["v3"] == 1
    assert out["closed"] == {"a2": 1, "v3": 1}


def test_slopes_json_and_text(capsys):
    assert run(["slopes", "--pmax", "5"]) == 0
    assert _json(capsys) == {"pmax": 5, "pairs": [[2, 1], [5, 2], [5, 3]]}
    assert run(["--format", "text", "slopes", "--pmax", "5"]) == 0
    assert "(2,1) (5,2) (5,3)" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["--format", "text", "invariants", "--pd", TREFOIL],
    ["invariants", "--pd", TREFOIL, "--format", "text"],
])
def test_format_before_or_after_subcommand(argv, capsys):
    assert run(argv) == 0
    out = capsys.readouterr().out
    assert "v3" in out and not out.lstrip().startswith("{")


def test_format_after_subcommand_overrides_default(capsys):
    assert run(["slopes", "--pmax", "5", "--format", "text"]) == 0
    assert "(2,1) (5,2) (5,3)" in capsys.readouterr().out
    assert run(["slopes", "--pmax", "5", "--format", "json"]) == 0
    assert _json(capsys)["pmax"] == 5


def test_config_prints_and_saves(tmp_path, capsys):
    saved = tmp_path / "out" / "resolved.json"
    saved.parent.mkdir()
    assert run(["--workers", "3", "config", "--save", str(saved)]) == 0
    printed = _json(capsys)
    assert printed["engine"]["max_workers"] == 3
    assert json.loads(saved.read_text(encoding="utf-8")) == printed


def test_config_save_failure_exits_1(tmp_path, capsys):
    assert run(["config", "--save", str(tmp_path / "missing" / "config.json")]) == 1


def test_output_is_deterministic(capsys):
    run(["invariants", "--pd", TREFOIL])
    first = capsys.readouterr().out
    run(["invariants", "--pd", TREFOIL])
    assert capsys.readouterr().out == first


def test_census(capsys):
    assert run(["census", str(SAMPLE), "--tau-source", "sample"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5
    summary = json.loads(lines[-1])["summary"]
    assert summary["tau_source"] == "sample"
    assert summary["exceptions"] == ["0_1"]


def test_census_with_bad_row_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text('name,crossings,pd,tau\nbad,1,"X(1,2,3,4)",0\n', encoding="utf-8")
    assert run(["census", str(path)]) == 1


def test_verify_small_grid(tmp_path, capsys, monkeypatch, small_config):
    monkeypatch.delenv("KNOTCOSMETIC_CENSUS", raising=False)
    config = tmp_path / "config.json"
    config.write_text(json.dumps(small_config), encoding="utf-8")
    assert run(["--config", str(config), "verify"]) == 0
    rows = _json(capsys)
    statuses = {row["property"]: row["status"] for row in rows}
    assert statuses["census exceptions"] == "SKIP"
    assert all(status in ("PASS", "SKIP") for status in statuses.values())


def test_render_text():
    text = render_text({"a": 1, "nested": {"b": None}, "pairs": [[1, 2]]})
    assert text.splitlines() == ["a         1", "nested.b  null", "pairs     (1,2)"]
