import json
import xml.etree.ElementTree as ET

import pytest

from hypfour.cli import main

from conftest import DATA

SVG = "{http://www.w3.org/2000/svg}"


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_exit_codes(capsys):
    code, out, _ = run(["validate", DATA / "pentagon.json"], capsys)
    assert code == 0 and json.loads(out)["convex"]
    code, out, _ = run(["validate", DATA / "square.json"], capsys)
    assert code == 1
    assert json.loads(out)["witnesses"]["generic_circle"] == [0, 1, 2, 3]


def test_validate_missing_file(capsys, tmp_path):
    code, _, err = run(["validate", tmp_path / "nope.json"], capsys)
    assert code == 2 and "cannot read" in err


def test_malformed_document(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [[0, 0], [2, 0], [0, 0.1]]}')
    code, _, err = run(["validate", bad], capsys)
    assert code == 2 and "unit disk" in err


def test_analyze(capsys, tmp_path):
    out_file = tmp_path / "a.json"
    code, _, _ = run(["analyze", DATA / "hexagon.json", "--out", out_file], capsys)
    rep = json.loads(out_file.read_text())
    assert code == 0 and rep["passed"]


def test_analyze_invalid_needs_force(capsys):
    code, out, _ = run(["analyze", DATA / "dart.json"], capsys)
    assert code == 1 and json.loads(out)["error"]
    code, out, _ = run(["analyze", DATA / "dart.json", "--force"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["checks"]["four_vertex"]["status"].startswith("not asserted")


def test_tolerance_override(capsys, tmp_path):
    tol = tmp_path / "tol.json"
    tol.write_text('{"eps_id": 1e-3}')
    code, _, _ = run(["--tolerances", tol, "validate", DATA / "pentagon.json"], capsys)
    assert code in (0, 1)
    tol.write_text('{"eps_bogus": 1}')
    code, _, err = run(["--tolerances", tol, "validate", DATA / "pentagon.json"], capsys)
    assert code == 2 and "tolerances" in err


def test_verify_small_run(capsys, tmp_path):
    js = tmp_path / "s.json"
    code, out, _ = run(["verify", "--count", 2, "--n-range", "4..6", "--seed", 5, "--json", js], capsys)
    assert code == 0
    assert json.loads(js.read_text())["all_pass"]
    assert out.splitlines()[0].split()[:2] == ["n", "count"]
    assert out.rstrip().endswith("ALL PASS")


def test_verify_rejects_triangles(capsys):
    code, _, err = run(["verify", "--n-range", "3..5", "--count", 1], capsys)
    assert code == 2 and "n >= 4" in err


def test_verify_injected_failure_is_reported(capsys):
    code, _, err = run(["verify", "--count", 1, "--n-range", "5..5", "--inject-failure", 0], capsys)
    assert code == 1
    doc = json.loads(err.split("\n", 1)[1])
    assert len(doc["vertices"]) == 5


def test_generate_and_reload(capsys, tmp_path):
    out = tmp_path / "c.jsonl"
    code, _, _ = run(["generate", "--n", 7, "--count", 3, "--seed", 1, "--out", out], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 3
    first = tmp_path / "first.json"
    first.write_text(lines[0])
    assert run(["validate", first], capsys)[0] == 0


def test_generate_stdout_is_deterministic(capsys):
    a = run(["generate", "--n", 6, "--seed", 9, "--model", "hyperboloid"], capsys)[1]
    b = run(["generate", "--n", 6, "--seed", 9, "--model", "hyperboloid"], capsys)[1]
    assert a == b and json.loads(a)["model"] == "hyperboloid"


def _paths(svg_text, cls):
    root = ET.fromstring(svg_text)
    return [e for e in root.iter() if e.get("class") == cls]


@pytest.mark.parametrize("flags", [[], ["--circles"], ["--exact-arcs"]])
def test_render_path_counts(capsys, tmp_path, flags):
    out = tmp_path / "p.svg"
    assert run(["render", DATA / "pentagon.json", "--out", out, *flags], capsys)[0] == 0
    text = out.read_text()
    assert len(_paths(text, "edge")) == 5
    assert len(_paths(text, "evolute")) == 5
    assert len(_paths(text, "circle")) == (5 if "--circles" in flags else 0)
    assert len(_paths(text, "cusp")) == len(_paths(text, "extremal-max")) + len(_paths(text, "extremal-min"))


def test_render_golden(capsys, tmp_path):
    out = tmp_path / "p.svg"
    run(["render", DATA / "pentagon.json", "--out", out], capsys)
    assert out.read_text() == (DATA / "pentagon.svg").read_text()


def test_render_invalid_polygon_still_draws(capsys, tmp_path):
    out = tmp_path / "s.svg"
    assert run(["render", DATA / "square.json", "--out", out], capsys)[0] == 0
    assert len(_paths(out.read_text(), "evolute")) == 0


def test_truncated_json(capsys, tmp_path):
    bad = tmp_path / "t.json"
    bad.write_text((DATA / "pentagon.json").read_text()[:40])
    code, _, err = run(["validate", bad], capsys)
    assert code == 2 and "invalid JSON" in err


def test_analyze_quadrilateral_end_to_end(capsys, tmp_path):
    doc = tmp_path / "q.json"
    run(["generate", "--n", 4, "--seed", 3, "--out", doc], capsys)
    code, out, _ = run(["analyze", doc], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["aggregates"]["N"] >= 4
    assert rep["checks"]["density_identity"]["residual"] < 1e-7


def test_report_aggregates_recompute_exactly(capsys):
    from hypfour.analysis import recompute_aggregates

    _, out, _ = run(["analyze", DATA / "hexagon.json"], capsys)
    rep = json.loads(out)
    again = recompute_aggregates(rep)
    assert again == {k: rep["aggregates"][k] for k in again}


def test_verify_full_default_run(capsys):
    code, out, _ = run(["verify", "--count", 1000, "--n-range", "4..12", "--seed", 7, "--jobs", 4], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "ALL PASS"
    assert all(float(line.split()[10]) < 1e-7 for line in lines[1:-1])
