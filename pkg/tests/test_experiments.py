import math

import pytest

from motkit.config import Settings
from motkit.errors import ParameterError
from motkit.experiments import run_lemma2, run_ratio, run_stability, run_variants
from motkit.experiments.lemma2 import LEMMA2_COLUMNS, default_thetas
from motkit.experiments.ratio import RATIO_COLUMNS, ratio_bound
from motkit.models.coupling import Norm


@pytest.fixture(scope="module")
def stability_report():
    return run_stability(6, settings=Settings(record_runtime=False))


def _rows(report, quantity):
    return [row for row in report.rows if row["quantity"] == quantity]


def test_stability_verdict_holds(stability_report):
    failing = [row for row in stability_report.rows if not row["pass"]]
    assert failing == []
    assert stability_report.verdict is True


def test_stability_values(stability_report):
    values = _rows(stability_report, "V^M(mu3, nu_3n)")
    assert [row["n"] for row in values] == [2, 3, 4, 5, 6]
    assert all(row["value"] == pytest.approx(1.0, abs=1e-7) for row in values)

    w1 = [row["value"] for row in _rows(stability_report, "W1(nu_3n, mu3P0)")]
    assert all(b < a for a, b in zip(w1, w1[1:]))
    assert all(w <= math.pi / (2 * n) + 1e-9 for n, w in zip(range(2, 7), w1))

    (limit,) = _rows(stability_report, "V^M(mu3, mu3P0)")
    assert limit["value"] == pytest.approx(0.5, abs=1e-7)
    (gap,) = _rows(stability_report, "value gap")
    assert gap["value"] == pytest.approx(0.5, abs=1e-6)


def test_stability_separation_witness(stability_report):
    separation = _rows(stability_report, "TV(pi', snap(pi_n))")
    assert all(row["value"] >= 0.25 - 1e-6 for row in separation)
    assert stability_report.params["separation_n0"] == 2


def test_stability_rows_are_ordered_by_n(stability_report):
    ns = [row["n"] for row in stability_report.rows if row["n"] is not None]
    assert ns == sorted(ns)


def test_stability_needs_two_steps():
    with pytest.raises(ParameterError):
        run_stability(1)


def test_ratio_euclidean():
    report = run_ratio(10)
    assert report.verdict
    assert list(report.rows[0].keys()) == RATIO_COLUMNS
    assert [row["n"] for row in report.rows] == list(range(2, 11))
    assert all(row["M"] == pytest.approx(1.0, abs=1e-7) for row in report.rows)
    assert all(row["W"] <= 1 / row["n"] + math.pi / (2 * row["n"]) + 1e-9 for row in report.rows)
    assert report.rows[-1]["ratio"] >= 3.8


@pytest.mark.parametrize("norm", [Norm.L1, Norm.LINF])
def test_ratio_other_norms_increase(norm):
    report = run_ratio(8, norm)
    assert report.verdict
    assert report.params["norm"] == norm.value
    ratios = [row["ratio"] for row in report.rows]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))


def test_ratio_bound_matches_closed_form():
    assert ratio_bound(10) == pytest.approx(10 / (1 + math.pi / 2))


def test_ratio_workers_do_not_change_rows():
    settings = Settings(record_runtime=False)
    serial = run_ratio(6, settings=settings, workers=1)
    threaded = run_ratio(6, settings=settings, workers=3)
    assert serial.rows == threaded.rows
    assert serial.fingerprint == threaded.fingerprint


@pytest.mark.parametrize("m", [1, 3, 5])
def test_lemma2_chord_bound(m):
    report = run_lemma2(m)
    assert report.verdict
    assert len(report.rows) == 10
    assert list(report.rows[0].keys()) == LEMMA2_COLUMNS


def test_lemma2_endpoints():
    report = run_lemma2(1, [0.0, math.pi / 2])
    first, last = report.rows
    assert first["W"] == pytest.approx(0.0, abs=1e-12)
    assert last["W"] == pytest.approx(math.sqrt(2), abs=1e-9)


def test_lemma2_rejects_angles_outside_the_quarter_turn():
    with pytest.raises(ParameterError):
        run_lemma2(3, [2.0])
    with pytest.raises(ParameterError):
        default_thetas(0)


def test_variants_report():
    report = run_variants(3, 3, 2, 0.3)
    assert report.verdict
    quantities = [row["quantity"] for row in report.rows]
    assert quantities == [
        "parallelogram convex order",
        "parallelogram mass within 1/3",
        "mixture W1",
        "mixture M1",
    ]
    assert report.params == {
        "m": 3, "n": 3, "grid": 2, "eps": 0.3, "config_hash": report.params["config_hash"],
    }
