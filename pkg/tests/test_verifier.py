import json
from pathlib import Path

import pytest

from simplexgraph.appendix import load_appendix
from simplexgraph.verifier import (
    SUITES,
    Checks,
    Context,
    Report,
    RunConfig,
    run_suites,
    verify_appendix,
    _canon,
)


@pytest.fixture(scope="module")
def report(ctx):
    return run_suites(RunConfig(), ctx)


def test_full_run_passes(report):
    assert len(report.checks) >= 40
    failing = [c.id for c in report.checks if not c.passed]
    assert failing == []
    ids = [c.id for c in report.checks]
    assert len(ids) == len(set(ids))


def test_documented_check_ids_present(report):
    ids = {c.id for c in report.checks}
    for name in ("count_lines", "degree_regular", "spread", "orbit_sizes", "sharp3trans", "A_split_by_Lijk",
                 "poly_equiv", "prop_ad_iff", "nL_values", "q3_point_count", "q5_triangle_exists", "q5_line_count"):
        assert name in ids


def test_json_shape_and_determinism(report, ctx):
    data = json.loads(report.to_json(timings=False))
    assert set(data) == {"suite", "checks", "summary"}
    assert data["summary"] == {"passed": len(report.checks), "failed": 0}
    assert set(data["checks"][0]) == {"id", "paper_claim", "expected", "actual", "pass", "runtime_ms"}
    again = run_suites(RunConfig(threads=3), ctx)
    assert again.to_json(timings=False) == report.to_json(timings=False)


def test_text_report(report):
    text = report.to_text()
    assert text.count("PASS") == len(report.checks)
    assert text.endswith(f"all: {len(report.checks)} passed, 0 failed\n")


def test_exception_becomes_failure():
    c = Checks()
    c.add("boom", "demo", 1, lambda: 1 / 0)
    (r,) = c.results
    assert not r.passed
    assert r.actual.startswith("error: ZeroDivisionError")


def test_canonical_values():
    assert _canon({3: {2, 1}, "a": (1, (2,))}) == {"3": [1, 2], "a": [1, [2]]}
    assert _canon(float("inf")) == "inf"


def test_transcription_error_is_caught(ctx, tmp_path):
    text = Path(load_appendix().source).read_text()
    # swap one L_st row pair so the matrix no longer matches the computed join
    bad = text.replace("L_45: 011ba|10111|110ab|1ab0a|1bab0", "L_45: 011ab|101ba|11011|1ab0b|1baa0", 1)
    bad = bad.replace("L_54: 011ab|101ba|11011|1ab0b|1baa0", "L_54: 011ba|10111|110ab|1ab0a|1bab0", 1)
    path = tmp_path / "swapped.txt"
    path.write_text(bad)
    results = verify_appendix(ctx, load_appendix(path))
    failed = {r.id for r in results if not r.passed}
    assert failed == {"pair_table_joins"}


def test_suite_validation():
    with pytest.raises(ValueError):
        run_suites(RunConfig(suites=("nope",)))
    with pytest.raises(ValueError):
        run_suites(RunConfig(suites=("theorem1",), q=5))
    assert SUITES[-1] == "smallq"


def test_small_q_subset():
    r = run_suites(RunConfig(suites=("smallq",), q=3))
    assert r.ok and all(c.id.startswith("q3_") for c in r.checks)
    assert isinstance(r, Report)


def test_missing_data_fails_checks_without_raising(tmp_path):
    ctx = Context(str(tmp_path / "missing.txt"))
    r = run_suites(RunConfig(suites=("appendix",)), ctx)
    assert r.failed == len(r.checks) > 0
    assert "missing.txt" in r.checks[0].actual
