from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from oddcolour.cli import dispatch, main
from oddcolour.formats import dump_edge_list, parse_embedding_doc
from oddcolour.catalog import catalog_graph
from oddcolour.report import SCHEMA, input_digest, strip_volatile

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("ODDCOLOUR_REGEN_GOLDEN") == "1"

GOLDEN_CASES = {
    "chi_odd_c5": ["chi-odd", "catalog:C5"],
    "colour8_c4": ["colour8", "catalog:C4"],
    "discharge_octahedron": ["discharge", "catalog:octahedron"],
    "scan_fig1_host": ["scan", "catalog:fig1-host"],
    "audit_octahedron": ["audit", "catalog:octahedron"],
    "solve_c5_k4": ["solve", "catalog:C5", "-k", "4"],
    "catalog_k4": ["catalog", "K4"],
}


def _normalized(report: dict) -> dict:
    out = strip_volatile(report)
    # the search backend depends on whether the extension was built
    if isinstance(out.get("result"), dict):
        out["result"] = {k: v for k, v in out["result"].items() if k != "backend"}
    return out


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_reports(name):
    code, report, text = dispatch(["--json", *GOLDEN_CASES[name]])
    assert json.loads(text) == report
    got = _normalized(report)
    path = GOLDEN / f"{name}.json"
    if REGEN:
        path.write_text(json.dumps(got, indent=2) + "\n")
    assert got == json.loads(path.read_text())
    assert got["exit_code"] == code


def test_report_envelope():
    _, report, _ = dispatch(["chi-odd", "catalog:C5"])
    assert list(report) == ["schema", "tool", "version", "command", "input", "input_digest",
                            "result", "exit_code", "wall_time_s"]
    assert report["schema"] == SCHEMA
    assert report["input_digest"].startswith("sha256:")


def test_chi_odd_text():
    code, _, text = dispatch(["chi-odd", "catalog:C5"])
    assert (code, text) == (0, "5\n")


@pytest.mark.parametrize(
    "argv,code",
    [
        (["solve", "catalog:C5", "-k", "5"], 0),
        (["solve", "catalog:C5", "-k", "4"], 1),
        (["verify", "catalog:C4", "--colouring", "0,1,0,1"], 1),
        (["verify", "catalog:C4", "--colouring", "0 1 2 3"], 0),
        (["verify", "catalog:C4", "--colouring", "0,1"], 2),
        (["verify", "catalog:C4"], 2),
        (["colour8", "catalog:K5"], 2),
        (["colour8", "catalog:icosahedron"], 0),
        (["discharge", "catalog:K3,3"], 2),
        (["discharge", "catalog:glued-octahedra", "--r1", "previous"], 0),
        (["audit", "catalog:K4"], 0),
        (["audit", "catalog:antiprism-4"], 0),
        (["scan", "catalog:C5"], 1),
        (["scan", "catalog:octahedron"], 0),
        (["chi-odd", "g6:D?{x"], 2),
        (["chi-odd", "catalog:nonesuch"], 2),
        (["chi-odd", "/no/such/file"], 2),
        (["solve", "catalog:icosahedron", "-k", "3", "--budget", "10"], 4),
        (["frobnicate"], 2),
        (["solve", "catalog:C5"], 2),
        (["chi-odd", "catalog:C5", "--bogus"], 2),
    ],
)
def test_exit_codes(argv, code):
    assert dispatch(argv)[0] == code


def test_graph6_error_reports_offset():
    code, report, text = dispatch(["chi-odd", "g6:D?{x"])
    assert code == 2 and "offset 3" in text and report["result"]["error"] == "input"


def test_budget_report():
    _, report, _ = dispatch(["solve", "catalog:icosahedron", "-k", "3", "--budget", "10"])
    assert report["result"]["error"] == "budget" and report["result"]["nodes"] > 10


def test_scan_outside_hypotheses_is_negative():
    # icosahedron: 5-regular, so the hypotheses do not hold and the answer is merely negative
    code, report, _ = dispatch(["scan", "catalog:icosahedron"])
    assert code == 1 and not report["result"]["guaranteed"]


def test_colour8_trace():
    code, report, _ = dispatch(["colour8", "catalog:glued-octahedra", "--trace"])
    res = report["result"]
    assert code == 0 and res["trace"][0]["step"] == "RemoveClaim1"
    assert res["trace_length"] == len(res["trace"]) and res["colours_used"] <= 8


def test_file_input(tmp_path):
    path = tmp_path / "c7.txt"
    path.write_text(dump_edge_list(catalog_graph("C7"), "C7"))
    code, report, _ = dispatch(["chi-odd", str(path)])
    assert code == 0 and report["result"]["chi_odd"] == 4
    assert report["input_digest"] == input_digest(path.read_text())


def test_embedding_override(tmp_path):
    _, report, _ = dispatch(["catalog", "octahedron"])
    path = tmp_path / "oct.emb"
    path.write_text(report["result"]["document"])
    code, rep, _ = dispatch(["discharge", "catalog:octahedron", "--embedding", str(path)])
    assert code == 0 and rep["result"]["total_after_units"] == -12
    code, _, _ = dispatch(["discharge", "catalog:C5", "--embedding", str(path)])
    assert code == 2


def test_gen_round_trips_through_files(tmp_path):
    code, _, text = dispatch(["gen", "--n", "15", "--seed", "4"])
    assert code == 0
    g, _, name = parse_embedding_doc(text)
    assert g.order == 15 and g.size == 39 and name == "random-15-4"
    path = tmp_path / "g.emb"
    path.write_text(text)
    assert dispatch(["colour8", str(path)])[0] == 0
    assert dispatch(["gen", "--n", "15", "--seed", "4"])[2] == text


def test_gen_formats():
    code, _, text = dispatch(["gen", "--n", "6", "--format", "graph6"])
    assert code == 0 and text.strip().startswith("E")
    assert dispatch(["gen", "--n", "2"])[0] == 2
    assert dispatch(["gen", "--n", "12", "--removals", "4", "--format", "edges"])[0] == 0


def test_catalog_listing():
    code, report, text = dispatch(["catalog"])
    assert code == 0 and "octahedron" in text.split() and "fig2-host" in report["result"]["names"]
    code, _, text = dispatch(["catalog", "petersen"])
    assert code == 0 and text.strip() == "IheA@GUAo"


def test_main_writes_streams(capsys):
    assert main(["chi-odd", "catalog:K4"]) == 0
    assert capsys.readouterr().out == "4\n"
    assert main(["chi-odd", "catalog:nonesuch"]) == 2
    err = capsys.readouterr().err
    assert "unknown catalog graph" in err


def test_console_script_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "oddcolour.cli", "--json", "chi-odd", "-"],
        input="Dhc\n", capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["chi_odd"] == 5
