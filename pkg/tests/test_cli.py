"""End-to-end runs of the command line surface.

Each test drives ``main`` with real files in a tmp directory and checks
the exit code contract: 0 ok/Found, 1 property-failed/Unsat, 2 budget,
3 bad input.
"""

import json

import pytest

from minkplanar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _report_of(err: str) -> dict:
    # the run report is the last stderr line
    line = err.strip().splitlines()[-1]
    return json.loads(line)


@pytest.fixture()
def fig1(tmp_path, capsys):
    prefix = tmp_path / "fig1"
    code, _, _ = run(capsys, "gen", "g2", "--out", str(prefix))
    assert code == 0
    return prefix


# ------------------------------------------------------------------ gen


def test_gen_writes_three_files_and_reports(tmp_path, capsys):
    prefix = tmp_path / "g"
    code, out, err = run(capsys, "gen", "g2", "--out", str(prefix))
    assert code == 0
    for suffix in (".graph.json", ".drawing.json", ".provenance.json"):
        assert (tmp_path / ("g" + suffix)).exists()
    rep = _report_of(err)
    assert rep["command"] == "gen"
    assert rep["stats"]["vertices"] == 20
    assert rep["stats"]["edges"] == 11
    assert rep["stats"]["anchors"] == 19
    assert rep["version"]


def test_gen_stdout_is_drawing_json(capsys):
    code, out, err = run(capsys, "gen", "gk", "--k", "4")
    assert code == 0
    doc = json.loads(out)
    assert "chains" in doc and "outer_face" in doc


def test_gen_gk_without_k_is_input_error(capsys):
    code, _, err = run(capsys, "gen", "gk")
    assert code == 3
    assert "needs --k" in err


# ------------------------------------------------------- validate, profile


def test_validate_exit_codes_match_the_figure(fig1, capsys):
    drawing = str(fig1) + ".drawing.json"
    code, out, _ = run(capsys, "validate", "--drawing", drawing,
                       "--min-k", "2")
    assert code == 0
    assert json.loads(out)["min_k"]["holds"] is True

    code, out, _ = run(capsys, "validate", "--drawing", drawing, "--simple")
    assert code == 1
    verdict = json.loads(out)
    assert verdict["simple"]["holds"] is False
    assert verdict["simple"]["witness"]["reason"]


def test_profile_lists_heavy_edges(fig1, capsys):
    drawing = str(fig1) + ".drawing.json"
    code, out, _ = run(capsys, "profile", "--drawing", drawing, "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == sum(c for *_, c in doc["per_pair"])
    assert doc["heavy"]  # the two side chords carry 3 crossings each


# ------------------------------------------------------------------ search


def test_search_unsat_and_budget_codes(fig1, tmp_path, capsys):
    graph = str(fig1) + ".graph.json"
    outp = tmp_path / "s.json"
    code, _, err = run(capsys, "search", "--graph", graph, "--k", "2",
                       "--simple", "--out", str(outp))
    assert code == 1
    doc = json.loads(outp.read_text())
    assert doc["status"] == "ExhaustedUnsat"
    assert doc["certificate"] is None
    assert _report_of(err)["outcome"] == "ExhaustedUnsat"

    code, _, _ = run(capsys, "search", "--graph", graph, "--k", "2",
                     "--budget-nodes", "5")
    assert code == 2


def test_search_found_emits_verified_certificate(tmp_path, capsys):
    graph = tmp_path / "path.json"
    graph.write_text(json.dumps({
        "vertices": [0, 1, 2, 3],
        "edges": [[0, 2], [1, 3]],
        "anchors": [0, 1, 2, 3],
    }))
    code, out, _ = run(capsys, "search", "--graph", str(graph), "--k", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "Found"
    assert doc["certificate"] is not None


# ------------------------------------------------- frame, compose, render


def test_frame_pack_carries_parameters(fig1, tmp_path, capsys):
    graph = str(fig1) + ".graph.json"
    prefix = tmp_path / "fr"
    code, _, err = run(capsys, "frame", "--graph", graph, "--k", "2",
                       "--t", "1", "--out", str(prefix))
    assert code == 0
    prov = json.loads((tmp_path / "fr.provenance.json").read_text())
    assert prov == {"a": 19, "k": 2, "ell": 1, "d": 171, "t": 1}
    rep = _report_of(err)
    assert rep["stats"]["crossings"] == 3 * 171


def test_compose_pack_and_render(tmp_path, capsys):
    prefix = tmp_path / "comp"
    code, _, _ = run(capsys, "compose", "--k", "2", "--t", "1",
                     "--out", str(prefix))
    assert code == 0
    drawing = str(prefix) + ".drawing.json"
    svg = tmp_path / "comp.svg"
    code, _, err = run(capsys, "render", "--drawing", drawing,
                       "--svg", str(svg), "--k", "2")
    assert code == 0
    text = svg.read_text()
    assert text.startswith("<?xml")
    assert "polyline" in text
    assert _report_of(err)["stats"]["residual"] < 1e-9


def test_render_audit_flag(fig1, tmp_path, capsys):
    drawing = str(fig1) + ".drawing.json"
    svg = tmp_path / "fig1.svg"
    code, _, _ = run(capsys, "render", "--drawing", drawing,
                     "--svg", str(svg), "--audit")
    assert code == 0
    assert svg.exists()


# ------------------------------------------------------------------ repro


def test_repro_lemma3_g2_confirms(capsys):
    code, out, _ = run(capsys, "repro", "lemma3-g2")
    assert code == 0
    doc = json.loads(out)
    assert doc["confirmed"] is True
    assert doc["search"] == "ExhaustedUnsat"
    names = [c["check"] for c in doc["checks"]]
    assert "offender-is-a1a2-b1a2" in names


def test_repro_lemma3_gk_confirms(capsys):
    code, out, _ = run(capsys, "repro", "lemma3-gk", "--k", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["confirmed"] is True
    assert {"check": "no-adjacent-pair-crosses", "ok": True} in doc["checks"]


def test_repro_lemma5_frame_confirms(capsys):
    code, out, _ = run(capsys, "repro", "lemma5-frame", "--t", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["confirmed"] is True
    assert doc["params"]["d"] == 171


def test_repro_thm1_compose_confirms(capsys):
    code, out, _ = run(capsys, "repro", "thm1-compose", "--k", "2", "--t", "1")
    assert code == 0
    assert json.loads(out)["confirmed"] is True


def test_repro_prop2_simplify_confirms(capsys):
    code, out, _ = run(capsys, "repro", "prop2-simplify",
                       "--count", "25", "--seed", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["confirmed"] is True
    assert doc["drawings"] == 25


def test_repro_open_question_reports_an_answer(capsys):
    code, out, _ = run(capsys, "repro", "open-question")
    assert code == 0
    doc = json.loads(out)
    assert doc["answer"] == "yes"
    assert doc["certificate_crossings"] == 9


def test_repro_budget_exhaustion_exits_two(capsys):
    code, out, _ = run(capsys, "repro", "open-question",
                       "--budget-nodes", "3")
    assert code == 2
    assert json.loads(out)["answer"] == "undecided within budget"


# ------------------------------------------------------------ error paths


def test_unknown_subcommand_prints_usage_and_exits_three(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 3
    assert "usage:" in err


def test_missing_file_and_malformed_graph(tmp_path, capsys):
    code, _, err = run(capsys, "validate", "--drawing",
                       str(tmp_path / "absent.json"))
    assert code == 3
    assert "cannot read" in err

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": [0], "edges": [[0, 1]]}))
    code, _, err = run(capsys, "search", "--graph", str(bad), "--k", "1")
    assert code == 3
    assert "/edges/0" in err


def test_report_goes_to_file_when_asked(fig1, tmp_path, capsys):
    drawing = str(fig1) + ".drawing.json"
    rpath = tmp_path / "run.json"
    code, _, err = run(capsys, "profile", "--drawing", drawing,
                       "--report", str(rpath))
    assert code == 0
    rep = json.loads(rpath.read_text())
    assert rep["command"] == "profile"
    assert drawing in rep["inputs"]
    assert len(rep["inputs"][drawing]) == 64  # sha256 hex
    assert "seconds" in rep["stats"]
    # nothing report-shaped leaked onto stderr
    assert "\"command\"" not in err
