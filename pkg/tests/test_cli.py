"""End-to-end CLI checks, including the four fully worked tableau examples."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from canonlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_eulerian(capsys):
    code, out, _ = run_cli(capsys, "poly", "eulerian", "3")
    assert code == 0
    assert out == "1 + 4*t + t^2\n"


def test_poly_gen_narayana(capsys):
    code, out, _ = run_cli(capsys, "poly", "gen-narayana", "2", "2")
    assert code == 0
    assert out == "u^2 + t\n"


def test_poly_sulanke(capsys):
    code, out, _ = run_cli(capsys, "poly", "sulanke", "3", "2")
    assert (code, out) == (0, "1 3 1\n")
    code, out, _ = run_cli(capsys, "poly", "sulanke", "3", "3", "2")
    assert (code, out) == (0, "20\n")


def test_poly_canon_and_bounds(capsys):
    code, out, _ = run_cli(capsys, "poly", "canon", "2", "2")
    assert (code, out) == (0, "u^2 + t + t*u^2 + t^2\n")
    code, _, err = run_cli(capsys, "poly", "canon", "6", "3")
    assert code == 2
    assert "feasibility bounds exceeded" in err


def test_poly_canon_sigma(capsys):
    code, out, _ = run_cli(capsys, "poly", "canon", "3", "2", "--sigma", "2 1 3")
    assert (code, out) == (0, "t*u^3 + t^2 + 2*t^2*u + t^3\n")


def test_poly_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "poly", "eulerian", "3")
    assert code == 0
    assert json.loads(out) == {
        "terms": [
            {"c": "1", "t": 0, "u": 0},
            {"c": "4", "t": 1, "u": 0},
            {"c": "1", "t": 2, "u": 0},
        ]
    }


def test_enumerate_canon(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "canon", "--n", "2", "--k", "2")
    assert code == 0
    assert out.splitlines() == ["1 1 2 2", "1 2 1 2", "2 1 2 1", "2 2 1 1"]


def test_enumerate_syt(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "syt", "--n", "2", "--k", "2", "--grid")
    assert code == 0
    assert out.splitlines() == ["1 2/3 4", "1 3/2 4"]


def test_enumerate_dyck(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "dyck", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]


def test_stats_labeled_matching_example(capsys):
    code, out, _ = run_cli(capsys, "stats", "--word", "3 5 3 2 5 2 1 4 1 4")
    assert code == 0
    assert out.splitlines() == ["Des: {2,3,5,6,8}", "Plat: {}", "voice: 3 5 2 1 4"]


def test_convert_matching_example(capsys):
    code, out, _ = run_cli(capsys, "convert", "matching", "--canon", "3 5 3 2 5 2 1 4 1 4")
    assert (code, out) == (0, "1-3:3 2-5:5 4-6:2 7-9:1 8-10:4\n")


def test_stats_sigma_descents_example(capsys):
    code, out, _ = run_cli(
        capsys,
        "stats",
        "--sigma",
        "3 5 1 4 2",
        "--tableau-word",
        "1 2 1 2 3 1 4 3 2 4 5 3 5 4 5",
    )
    assert code == 0
    assert out.splitlines() == [
        "canon: 3 5 3 5 1 3 4 1 5 4 2 1 2 4 2",
        "Des_sigma: {2,4,7,9,10,11,14}",
        "Plat: {}",
    ]


def test_stats_plain_tableau(capsys):
    code, out, _ = run_cli(capsys, "stats", "--tableau-word", "1 1 2 2")
    assert code == 0
    assert out.splitlines() == ["Des: {2}", "Asc: {}", "Plat: {1,3}"]


def test_stats_stdin_bulk(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("1 1 2 2\n1 2 1 2\n"))
    code, out, _ = run_cli(capsys, "stats")
    assert code == 0
    assert out.splitlines() == [
        "Des: {2}",
        "Asc: {}",
        "Plat: {1,3}",
        "",
        "Des: {1,3}",
        "Asc: {2}",
        "Plat: {}",
    ]


def test_bij_f_and_F_example(capsys):
    grid = "1 3 5 9 11 12/2 7 8 14 16 20/4 10 13 17 18 22/6 15 19 21 23 24"
    code, out, _ = run_cli(capsys, "bij", "apply", "--map", "f", "--params", "1 3", "--tableau-grid", grid)
    assert (code, out) == (
        0,
        "1 3 5 10 12 13/2 7 8 14 16 20/4 9 11 17 18 22/6 15 19 21 23 24\n",
    )
    code, out, _ = run_cli(capsys, "bij", "apply", "--map", "F", "--params", "1 3", "--tableau-grid", grid)
    assert (code, out) == (
        0,
        "1 3 4 10 12 13/2 7 8 14 16 20/5 9 11 17 18 22/6 15 19 21 23 24\n",
    )


def test_bij_g_example(capsys):
    code, out, _ = run_cli(
        capsys,
        "bij", "apply", "--map", "g", "--params", "2 5",
        "--tableau-grid", "1 5 10/2 8 15/3 11 18/4 13 19/6 14 21/7 16 22/9 17 23/12 20 24",
    )
    assert (code, out) == (
        0,
        "1 5 9/2 7 17/3 11 18/4 13 19/6 14 21/8 15 22/10 16 23/12 20 24\n",
    )


def test_bij_gS_trace_example(capsys):
    code, out, _ = run_cli(
        capsys,
        "bij", "apply", "--map", "gS", "--params", "{2,5,6}", "--trace",
        "--tableau-grid", "1 5 10/2 8 15/3 11 17/4 13 18/6 14 20/7 16 22/9 19 23/12 21 24",
    )
    assert code == 0
    lines = out.splitlines()
    steps = [json.loads(line) for line in lines[:-1]]
    assert [(s["op"], s["params"]) for s in steps] == [
        ("g", [5, 6]),
        ("g", [2, 5]),
        ("g", [0, 2]),
    ]
    assert lines[-1] == "1 5 9/2 7 17/3 11 18/4 13 19/6 14 21/8 15 22/10 16 23/12 20 24"


def test_bij_phi_trace_example(capsys):
    code, out, _ = run_cli(
        capsys,
        "bij", "apply", "--map", "phi", "--sigma", "3 1 4 2", "--trace",
        "--tableau-grid", "1 3 4 9/2 7 8 13/5 10 12 15/6 11 14 16",
    )
    assert code == 0
    lines = out.splitlines()
    steps = [json.loads(line) for line in lines[:-1]]
    assert [(s["op"], s["params"]) for s in steps] == [
        ("f", [1, 3]),
        ("f", [2, 4]),
        ("g", [1, 3]),
        ("g", [0, 1]),
    ]
    assert lines[-1] == "1 4 5 11/2 6 7 14/3 9 12 15/8 10 13 16"


def test_bij_word_in_word_out(capsys):
    code, out, _ = run_cli(
        capsys, "bij", "apply", "--map", "f", "--sigma", "2 1", "--tableau-word", "1 1 2 2"
    )
    assert code == 0
    # sigma = 21 is already reverse-layered, so the schedule is empty
    assert out == "1 1 2 2\n"


def test_bij_missing_params(capsys):
    code, _, err = run_cli(capsys, "bij", "apply", "--map", "g", "--tableau-word", "1 1 2 2")
    assert code == 2
    assert "map g needs" in err


def test_convert_dyck(capsys):
    code, out, _ = run_cli(capsys, "convert", "dyck", "--tableau-word", "1 2 1 2")
    assert (code, out) == (0, "UUDD\n")


def test_convert_word_grid(capsys):
    code, out, _ = run_cli(capsys, "convert", "grid", "--tableau-word", "1 2 1 3 2 3 4 5 4 5")
    assert (code, out) == (0, "1 3/2 5/4 6/7 9/8 10\n")
    code, out, _ = run_cli(capsys, "convert", "word", "--tableau-grid", "1 3/2 5/4 6/7 9/8 10")
    assert (code, out) == (0, "1 2 1 3 2 3 4 5 4 5\n")


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "gf-eulerian")
    assert code == 0
    assert "suite gf-eulerian: pass, 1 instances, 0 failures" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "per-sigma", "--max-n", "2", "--max-k", "2", "--json")
    assert code == 0
    payloads = [json.loads(line) for line in out.splitlines()]
    assert payloads[-1]["suite"] == "per-sigma"
    assert payloads[-1]["instances"] == 4


def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "stats", "--tableau-word", "1 2 2")
    assert code == 2
    assert err.startswith("error:")


def test_usage_error_raises_system_exit():
    with pytest.raises(SystemExit) as info:
        main(["poly"])
    assert info.value.code == 2


def test_console_script_installed():
    proc = subprocess.run(
        ["canonlab", "poly", "eulerian", "4"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 + 11*t + 11*t^2 + t^3\n"
