import io
import json
import subprocess
import sys

import pytest

from bicrit import generators as gen
from bicrit.cli import main, parse_range
from bicrit.codecs import emit_edgelist, emit_graph6


def run(args, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_k4(capsys):
    code, out, _ = run(["analyze", "--g6", "C~"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["bicritical"] is True and rep["minimal"] is True
    assert rep["cubic"] == 4 and rep["separations"] == 0
    assert rep["brick"] == "minimal-brick" and rep["deletable"] == []


def test_analyze_edgelist_and_non_pm(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(emit_edgelist(gen.cycle(5)) + emit_edgelist(gen.double_k4()))
    code, out, _ = run(["analyze", "--input", str(path), "--format", "edgelist"], capsys)
    assert code == 0
    c5, d4 = (json.loads(x) for x in out.splitlines())
    assert c5["bicritical"] is False and c5["separation_pairs"] is None and c5["deletable"] is None
    assert d4["separation_pairs"] == [[0, 1]] and d4["brick"] == "bicritical-not-brick"


def test_decompose_d4_writes_dot(capsys, tmp_path):
    src = tmp_path / "d4.g6"
    src.write_text(emit_graph6(gen.double_k4()) + "\n")
    dot = tmp_path / "out.dot"
    code, out, _ = run(["decompose", "--input", str(src), "--policy", "lex", "--dot", str(dot)], capsys)
    assert code == 0
    rep = json.loads(out)
    assert (rep["s"], rep["b"]) == (1, 2)
    assert rep["bricks"] == ["C~", "C~"]
    assert dot.read_text().startswith("digraph decomposition")


def test_decompose_random_needs_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--g6", "C~", "--policy", "random"])
    assert exc.value.code == 2
    code, out, _ = run(["decompose", "--g6", emit_graph6(gen.triple_k4()), "--policy", "random",
                        "--seed", "3"], capsys)
    assert code == 0 and json.loads(out)["policy"] == "random:3"


def test_decompose_non_bicritical_is_input_error(capsys):
    code, _, err = run(["decompose", "--g6", emit_graph6(gen.cycle(6))], capsys)
    assert code == 2 and "bicritical" in err


@pytest.mark.parametrize("args", [
    ["analyze", "--g6", "C"],
    ["analyze", "--input", "/no/such/file"],
    ["hunt", "--suite", "nonsense", "--n-max", "4"],
    ["hunt", "--suite", "all", "--n-max", "4"],
    ["scan", "--n", "4..12"],
    ["verify", "--suite", "bogus", "--n-max", "4"],
])
def test_input_errors_exit_2(args, capsys):
    code, _, err = run(args, capsys)
    assert code == 2 and err.startswith("bicrit:")


@pytest.mark.parametrize("args", [
    [],
    ["analyze"],
    ["analyze", "--g6", "C~", "--stdin"],
    ["scan"],
    ["scan", "--n", "8..4"],
    ["hunt", "--suite", "main_theorem"],
])
def test_usage_errors_exit_2(args):
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code == 2


def test_parse_range():
    assert parse_range("4..8") == (4, 8)
    assert parse_range("6") == (6, 6)


def test_scan_report_and_witnesses(capsys, tmp_path):
    report = tmp_path / "census.json"
    wit = tmp_path / "witnesses.g6"
    code, _, _ = run(["scan", "--n", "4..6", "--workers", "1", "--report", str(report),
                      "--witnesses", str(wit)], capsys)
    assert code == 0
    data = json.loads(report.read_text())
    assert data["passed"] and data["orders"]["4"]["sharpness_witnesses"] == ["C~"]
    assert "C~" in wit.read_text().split()
    # identical configuration gives a byte-identical report
    again = tmp_path / "again.json"
    run(["scan", "--n", "4..6", "--workers", "2", "--report", str(again)], capsys)
    assert again.read_bytes() == report.read_bytes()


def test_scan_stream_from_stdin(capsys, monkeypatch):
    code, out, _ = run(["scan", "--stdin", "--workers", "1", "--suite", "main_theorem"], capsys,
                       stdin="C~\nEK~o\n", monkeypatch=monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert data["orders"]["6"]["sharpness_witnesses"] == ["EK~o"]


def test_scan_malformed_stream(capsys, monkeypatch):
    code, _, err = run(["scan", "--stdin", "--workers", "2"], capsys, stdin="C~\nbad!\n",
                       monkeypatch=monkeypatch)
    assert code == 2 and "malformed" in err


def test_scan_with_failing_probe_exits_1(capsys):
    code, out, err = run(["scan", "--n", "6", "--workers", "1", "--suite", "all_bicritical_are_bricks"],
                         capsys)
    assert code == 1
    assert "EK~o" in err and not json.loads(out)["passed"]


def test_verify_stream(capsys):
    code, out, err = run(["verify", "--n-max", "6", "--workers", "1"], capsys)
    assert code == 0
    records = [json.loads(x) for x in out.splitlines()]
    assert records and all(r["status"] != "fail" for r in records)
    assert json.loads(err)["fail"] == 0


def test_verify_failure_exit_1_names_witness(capsys):
    code, out, _ = run(["verify", "--g6", emit_graph6(gen.double_k4()), "--suite",
                        "all_bicritical_are_bricks"], capsys)
    assert code == 1
    (rec,) = [json.loads(x) for x in out.splitlines()]
    assert rec["status"] == "fail" and rec["subject"] == "E^rG" and rec["witness"]["pair"] == [0, 1]


def test_verify_vacuous_is_exit_0(capsys):
    code, out, _ = run(["verify", "--g6", "Dhc", "--suite", "main_theorem"], capsys)
    assert code == 0 and json.loads(out)["status"] == "vacuous"


def test_hunt(capsys):
    code, out, _ = run(["hunt", "--suite", "all_bicritical_are_bricks", "--n-max", "6", "--workers", "1"],
                       capsys)
    assert code == 1 and json.loads(out)["subject"] == "EK~o"
    code, out, _ = run(["hunt", "--suite", "always_true", "--n-max", "6"], capsys)
    assert code == 0 and out.strip() == "none"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "bicrit", "analyze", "--g6", "C~"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["cubic"] == 4
