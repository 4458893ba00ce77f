from __future__ import annotations

import json

import pytest

from canonlab.verify import (
    SUITE_NAMES,
    check_bij_property,
    check_equidistribution,
    check_gf_eulerian,
    check_lemma_fF,
    check_lemma_g,
    check_main,
    check_ndes,
    check_per_sigma,
    check_symmetry,
    run_suite,
    run_suites,
    suite_grid,
)


def test_single_instance_checks_pass():
    assert check_main(3, 2).ok
    assert check_per_sigma(3, 2).ok
    assert check_bij_property(3, 2).ok
    assert check_lemma_fF(4, 2).ok
    assert check_lemma_g(4, 2).ok
    assert check_symmetry(3, 3).ok
    assert check_ndes(4, 3).ok
    assert check_equidistribution(3, 3).ok
    assert check_gf_eulerian(6).ok


def test_run_suite_small_grid():
    report = run_suite("main", max_n=3, max_k=2)
    assert report.suite == "main"
    assert report.ok
    assert report.failures == 0
    assert len(report.instances) == 6
    assert {(r.params["n"], r.params["k"]) for r in report.instances} == {
        (n, k) for n in (1, 2, 3) for k in (1, 2)
    }


def test_suite_grid_defaults():
    main = [(d["n"], d["k"]) for d in suite_grid("main")]
    assert (5, 3) in main and (4, 4) in main and (5, 2) in main
    assert all(n <= 4 and k <= 3 for n, k in main[:12])
    ndes = [(d["n"], d["k"]) for d in suite_grid("ndes")]
    assert all(n * k <= 16 for n, k in ndes)
    assert (8, 2) in ndes and (2, 8) in ndes
    lemma_g = [(d["n"], d["k"]) for d in suite_grid("lemma-g")]
    assert max(n for n, _ in lemma_g) == 5
    assert suite_grid("gf-narayana", order=5) == [{"order": 5}]


def test_suite_grid_refuses_oversized():
    with pytest.raises(ValueError, match="cap"):
        suite_grid("main", max_n=7, max_k=3)
    with pytest.raises(ValueError):
        suite_grid("nonsense")


def test_summary_lines_format():
    report = run_suite("per-sigma", max_n=2, max_k=2)
    lines = report.summary_lines()
    assert all(line.startswith("  pass") for line in lines[:-1])
    assert lines[-1].startswith("suite per-sigma: pass, 4 instances, 0 failures")


def test_json_lines_format():
    report = run_suite("gf-eulerian")
    lines = report.json_lines()
    payloads = [json.loads(line) for line in lines]
    assert payloads[-1]["suite"] == "gf-eulerian"
    assert payloads[-1]["ok"] is True
    assert payloads[-1]["failures"] == 0
    assert all(p["ok"] for p in payloads[:-1])


def test_run_suites_all_names():
    reports = run_suites(["gf-eulerian", "gf-narayana"], order=6)
    assert [r.suite for r in reports] == ["gf-eulerian", "gf-narayana"]
    assert all(r.ok for r in reports)


def test_run_suite_parallel_matches_serial():
    serial = run_suite("per-sigma", max_n=3, max_k=2)
    parallel = run_suite("per-sigma", max_n=3, max_k=2, workers=2)
    assert [r.params for r in serial.instances] == [r.params for r in parallel.instances]
    assert [r.ok for r in serial.instances] == [r.ok for r in parallel.instances]


def test_all_suite_names_runnable_tiny():
    """Every suite accepts its smallest sensible bounds and passes."""
    for name in SUITE_NAMES:
        if name.startswith("gf-"):
            report = run_suite(name, order=4)
        else:
            report = run_suite(name, max_n=2, max_k=2)
        assert report.ok, name
