"""
W1(mu_m P_0, mu_m P_theta) against the chord 2 sin(theta/2) and the angle theta.
"""
import math
from typing import Optional, Sequence

import numpy as np

from motkit.config import Settings, get_settings
from motkit.constructions import mu_m, random_walk_kernel
from motkit.errors import ParameterError
from motkit.experiments.parallel import map_ordered
from motkit.experiments.report import ReportBuilder
from motkit.measure.core import apply_kernel
from motkit.models.report import ExperimentReport
from motkit.telemetry import experiment_span
from motkit.transport import ot_value

LEMMA2_COLUMNS = ["theta", "m", "W", "chord_bound", "angle_bound", "pass"]
BOUND_TOL = 1e-8


def default_thetas(count: int = 10) -> list[float]:
    if count < 1:
        raise ParameterError(f"theta count must be >= 1, got {count}")
    return [float(t) for t in np.linspace(0.0, math.pi / 2, count)]


def run_lemma2(
    m: int,
    thetas: Optional[Sequence[float]] = None,
    workers: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> ExperimentReport:
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    thetas = [float(t) for t in thetas] if thetas is not None else default_thetas()
    for theta in thetas:
        if not 0.0 <= theta <= math.pi / 2:
            raise ParameterError(f"theta must lie in [0, pi/2], got {theta}")
    settings = settings or get_settings()
    workers = workers or settings.workers
    base = apply_kernel(mu_m(m), random_walk_kernel(0.0))

    def row_for(theta: float) -> dict:
        W, _ = ot_value(base, apply_kernel(mu_m(m), random_walk_kernel(theta)), settings=settings.solver)
        chord = 2.0 * math.sin(theta / 2.0)
        return {
            "theta": theta,
            "m": m,
            "W": W,
            "chord_bound": chord,
            "angle_bound": theta,
            "pass": bool(W <= chord + BOUND_TOL and W <= theta + BOUND_TOL),
        }

    builder = ReportBuilder("lemma2", {"m": m, "thetas": thetas}, settings)
    with experiment_span("lemma2"):
        builder.extend(map_ordered(row_for, thetas, workers))
        return builder.build()
