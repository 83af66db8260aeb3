import json
import math

import pytest

from motkit.config import Settings
from motkit.experiments.fingerprint import compute_report_fingerprint
from motkit.experiments.lemma2 import run_lemma2
from motkit.experiments.report import (
    CHECK_COLUMNS,
    ReportBuilder,
    check_row,
    holds,
    render_report,
    report_to_csv,
)


@pytest.fixture
def quiet_settings():
    return Settings(record_runtime=False)


def test_fingerprint_ignores_runtime_and_itself():
    payload = {"name": "x", "rows": [], "verdict": True, "runtime_ms": 5, "fingerprint": "abc"}
    same = dict(payload, runtime_ms=999, fingerprint="")
    assert compute_report_fingerprint(payload) == compute_report_fingerprint(same)
    assert compute_report_fingerprint(payload) != compute_report_fingerprint(dict(payload, verdict=False))


def test_repeated_runs_are_byte_identical(quiet_settings):
    thetas = [0.0, 0.4, math.pi / 2]
    first = render_report(run_lemma2(3, thetas, settings=quiet_settings), "json")
    second = render_report(run_lemma2(3, thetas, settings=quiet_settings), "json")
    assert first == second
    assert json.loads(first)["runtime_ms"] == 0


def test_fingerprint_is_stable_with_timing_on():
    timed = Settings(record_runtime=True)
    a = run_lemma2(1, [0.2], settings=timed)
    b = run_lemma2(1, [0.2], settings=timed)
    assert a.fingerprint == b.fingerprint
    assert len(a.fingerprint) == 64


def test_report_json_schema(quiet_settings):
    report = json.loads(render_report(run_lemma2(1, [0.1], settings=quiet_settings)))
    assert set(report) == {"name", "params", "rows", "verdict", "runtime_ms", "fingerprint"}
    assert report["params"]["config_hash"]


def test_verdict_is_the_conjunction_of_row_flags(quiet_settings):
    builder = ReportBuilder("demo", {}, quiet_settings)
    builder.add(check_row("ok", 1.0, 1.0, "==", 0.0))
    builder.add(check_row("too big", 2.0, 1.0, "<=", 1e-9))
    report = builder.build()
    assert report.verdict is False
    assert [row["pass"] for row in report.rows] == [True, False]


def test_csv_has_a_header_and_one_line_per_row(quiet_settings):
    builder = ReportBuilder("demo", {}, quiet_settings)
    builder.add(check_row("a", 0.5, 1.0, "<=", 0.0, n=2))
    builder.add(check_row("b", 0.25, 1.0, "<=", 0.0, n=3))
    lines = report_to_csv(builder.build()).strip().split("\n")
    assert lines[0] == "n,quantity,value,bound,relation,tol,pass"
    assert len(lines) == 3


@pytest.mark.parametrize(
    "value,bound,relation,tol,expected",
    [
        (1.0, 1.0, "<=", 0.0, True),
        (1.0 + 1e-10, 1.0, "<=", 1e-9, True),
        (1.1, 1.0, "<=", 1e-9, False),
        (0.9, 1.0, ">=", 0.2, True),
        (1.0, 1.0, "<", 0.0, False),
        (2.0, 1.0, ">", 0.0, True),
        (float("nan"), 1.0, "==", 1.0, False),
    ],
)
def test_relations(value, bound, relation, tol, expected):
    assert holds(value, bound, relation, tol) is expected


def test_unknown_format_is_rejected(quiet_settings):
    report = ReportBuilder("demo", {}, quiet_settings).build()
    with pytest.raises(ValueError):
        render_report(report, "xml")


def test_csv_columns_follow_the_check_layout(quiet_settings):
    builder = ReportBuilder("demo", {}, quiet_settings)
    row = check_row("a", 0.5, 1.0, "<=", 0.0, n=2)
    builder.add({key: row[key] for key in reversed(list(row))})
    lines = report_to_csv(builder.build()).strip().split("\n")
    assert lines[0].split(",") == CHECK_COLUMNS
    assert lines[1] == "2,a,0.5,1.0,<=,0.0,True"


def test_csv_of_an_empty_check_report_is_a_header(quiet_settings):
    report = ReportBuilder("demo", {}, quiet_settings).build()
    assert report_to_csv(report) == ",".join(CHECK_COLUMNS) + "\n"
