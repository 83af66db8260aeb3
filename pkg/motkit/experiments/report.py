"""
Assembly and export of ExperimentReport records.
"""
import io
import logging
import math
import time
from typing import Any, Dict, List, Literal, Optional

import pandas as pd

from motkit.config import Settings, compute_config_hash, get_settings
from motkit.experiments.fingerprint import compute_report_fingerprint
from motkit.models.report import ExperimentReport
from motkit.telemetry import emit_experiment_telemetry

logger = logging.getLogger("motkit.experiments")

Relation = Literal["<=", ">=", "==", "<", ">"]

CHECK_COLUMNS = ["n", "quantity", "value", "bound", "relation", "tol", "pass"]


def holds(value: float, bound: float, relation: Relation, tol: float) -> bool:
    if not (math.isfinite(value) and math.isfinite(bound)):
        return False
    if relation == "<=":
        return value <= bound + tol
    if relation == ">=":
        return value >= bound - tol
    if relation == "==":
        return abs(value - bound) <= tol
    if relation == "<":
        return value < bound
    if relation == ">":
        return value > bound
    raise ValueError(f"unknown relation {relation!r}")


def check_row(
    quantity: str,
    value: float,
    bound: float,
    relation: Relation,
    tol: float = 0.0,
    n: Optional[int] = None,
) -> Dict[str, Any]:
    """One numeric claim together with the bound it is checked against."""
    return {
        "n": n,
        "quantity": quantity,
        "value": float(value),
        "bound": float(bound),
        "relation": relation,
        "tol": float(tol),
        "pass": holds(float(value), float(bound), relation, tol),
    }


class ReportBuilder:
    def __init__(self, name: str, params: Dict[str, Any], settings: Optional[Settings] = None):
        self.name = name
        self.settings = settings or get_settings()
        self.params = dict(params)
        self.params["config_hash"] = compute_config_hash(self.settings)
        self.rows: List[Dict[str, Any]] = []
        self._start = time.perf_counter()

    def add(self, row: Dict[str, Any]) -> None:
        level = logging.INFO if row["pass"] else logging.WARNING
        logger.log(level, "%s %s", self.name, row)
        self.rows.append(row)

    def extend(self, rows: List[Dict[str, Any]]) -> None:
        for row in rows:
            self.add(row)

    def build(self) -> ExperimentReport:
        runtime_ms = int((time.perf_counter() - self._start) * 1000) if self.settings.record_runtime else 0
        verdict = all(bool(row["pass"]) for row in self.rows)
        report = ExperimentReport(
            name=self.name,
            params=self.params,
            rows=self.rows,
            verdict=verdict,
            runtime_ms=runtime_ms,
        )
        report.fingerprint = compute_report_fingerprint(report.model_dump(mode="json"))
        logger.info("%s verdict=%s runtime_ms=%d", self.name, verdict, runtime_ms)
        emit_experiment_telemetry(self.name, verdict, runtime_ms)
        return report


def report_to_json(report: ExperimentReport) -> str:
    return report.model_dump_json(indent=2)


def report_columns(report: ExperimentReport) -> List[str]:
    """CSV column order: CHECK_COLUMNS for check-row reports, else the key order of the rows."""
    if not report.rows or set(report.rows[0]) == set(CHECK_COLUMNS):
        return list(CHECK_COLUMNS)
    return list(report.rows[0])


def report_to_csv(report: ExperimentReport) -> str:
    frame = pd.DataFrame(report.rows, columns=report_columns(report))
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def render_report(report: ExperimentReport, fmt: Literal["json", "csv"] = "json") -> str:
    if fmt == "json":
        return report_to_json(report)
    if fmt == "csv":
        return report_to_csv(report)
    raise ValueError(f"unknown report format {fmt!r}")
