import json

from distnum.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def fixture_to_file(capsys, tmp_path, name):
    code, out, _ = run_cli(capsys, "fixture", name)
    assert code == 0
    path = tmp_path / f"{name}.json"
    path.write_text(out)
    return str(path)


def report_of(out):
    report = json.loads(out)
    report.pop("timing_ms", None)
    return report


def test_fixture_emits_stable_json(capsys):
    code1, out1, _ = run_cli(capsys, "fixture", "c5")
    code2, out2, _ = run_cli(capsys, "fixture", "c5")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["vertices"] == 5 and len(doc["edges"]) == 5


def test_fixture_unknown_name(capsys):
    code, _, err = run_cli(capsys, "fixture", "bogus")
    assert code == 2
    assert "available" in err


def test_action_exact_on_s3_conjugation(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "figure3")
    code, out, _ = run_cli(capsys, "action", path, "--exact")
    assert code == 0
    report = report_of(out)
    assert report["exact"]["distinguishing_number"] == 2
    assert report["exact"]["witness_verified"]
    assert report["input"]["group_order"] == 6


def test_action_trivial_document(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "trivial")
    code, out, _ = run_cli(capsys, "action", path)
    assert code == 0
    assert report_of(out)["exact"]["distinguishing_number"] == 1


def test_action_construct_natural_s4(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "natural-s4")
    code, out, _ = run_cli(capsys, "action", path, "--construct")
    assert code == 0
    section = report_of(out)["construction"]
    assert section["label_count"] == 4
    assert section["bound_product"] == 24 and section["group_order"] == 24
    assert section["bound_ok"] and section["labelling_verified"]


def test_action_kmax_exceeded_still_reports(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "natural-s4")
    code, out, _ = run_cli(capsys, "action", path, "--kmax", "3")
    assert code == 0
    section = report_of(out)["exact"]
    assert section["exceeded"] and section["distinguishing_number"] is None


def test_action_reports_are_deterministic(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "figure5")
    _, out1, _ = run_cli(capsys, "action", path, "--exact", "--construct")
    _, out2, _ = run_cli(capsys, "action", path, "--exact", "--construct")
    assert report_of(out1) == report_of(out2)
    assert report_of(out1)["exact"]["distinguishing_number"] == 3


def test_graph_exact_c5(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "c5")
    code, out, _ = run_cli(capsys, "graph", path, "--exact")
    assert code == 0
    report = report_of(out)
    assert report["exact"]["distinguishing_number"] == 3
    assert report["input"]["automorphism_order"] == 10


def test_graph_figure2_g1(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "figure2-g1")
    code, out, _ = run_cli(capsys, "graph", path)
    assert code == 0
    assert report_of(out)["exact"]["distinguishing_number"] == 4


def test_graph_tree_flag(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "figure7")
    code, out, _ = run_cli(capsys, "graph", path, "--tree", "--exact")
    assert code == 0
    report = report_of(out)
    assert report["tree"]["label_count"] <= 5 and report["tree"]["labelling_verified"]
    assert report["exact"]["distinguishing_number"] == 3


def test_graph_construct_section(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "c6")
    code, out, _ = run_cli(capsys, "graph", path, "--construct")
    assert code == 0
    section = report_of(out)["construction"]
    assert section["bound_ok"] and section["labelling_verified"]
    assert section["iterations"] == section["label_count"] - 1


def test_graph_tree_on_non_tree_exits_4(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "c5")
    code, _, err = run_cli(capsys, "graph", path, "--tree")
    assert code == 4
    assert "tree" in err


def test_graph_vertex_limit_resource_error(capsys, tmp_path):
    path = fixture_to_file(capsys, tmp_path, "figure2-g3")
    code, _, err = run_cli(capsys, "graph", path)
    assert code == 3
    code, out, _ = run_cli(capsys, "graph", path, "--vertex-limit", "14")
    assert code == 0
    assert report_of(out)["exact"]["distinguishing_number"] == 2


def test_malformed_json_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    code, _, err = run_cli(capsys, "action", str(path))
    assert code == 2
    assert "line" in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "action", str(tmp_path / "absent.json"))
    assert code == 2


def test_invalid_document_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"degree": 3, "generators": [[0, 0, 1]]}))
    code, _, err = run_cli(capsys, "action", str(path))
    assert code == 2


def test_verify_single_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "figure2")
    assert code == 0
    assert "PASS figure2:g1" in out and "3/3 checks passed" in out


def test_verify_cycles_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "cycles")
    assert code == 0
    assert "D(C_5) = 3" in out and "D(C_6) = 2" in out


def test_verify_unknown_check(capsys):
    code, _, err = run_cli(capsys, "verify", "bogus")
    assert code == 2
    assert "available" in err


def test_verify_list(capsys):
    code, out, _ = run_cli(capsys, "verify", "--list")
    assert code == 0
    names = out.split()
    assert "cycles" in names and "construction" in names and "oracle" in names


def test_fixture_action_round_trip_reports(capsys, tmp_path):
    # re-ingesting an emitted fixture reproduces the identical report
    path1 = fixture_to_file(capsys, tmp_path, "s4-conjugation")
    _, out1, _ = run_cli(capsys, "action", path1, "--exact")
    path2 = fixture_to_file(capsys, tmp_path, "s4-conjugation")
    _, out2, _ = run_cli(capsys, "action", path2, "--exact")
    assert report_of(out1) == report_of(out2)
    assert report_of(out1)["exact"]["distinguishing_number"] == 2
