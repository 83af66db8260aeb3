"""
Blow-up of M1 / W1 along (mu_n, nu_{n,n}).
"""
import logging
import math
from typing import Any, Dict, List, Optional

import numpy as np

from motkit.config import Settings, get_settings
from motkit.constructions import mu_m, nu_mn, theta_n
from motkit.errors import ParameterError
from motkit.experiments.parallel import map_ordered
from motkit.experiments.report import ReportBuilder
from motkit.models.coupling import EUCLIDEAN, CostSpec, Norm
from motkit.models.report import ExperimentReport
from motkit.telemetry import experiment_span
from motkit.transport import mot_value, ot_value

logger = logging.getLogger("motkit.experiments")

RATIO_COLUMNS = ["n", "M", "W", "ratio", "bound", "pass"]
BOUND_TOL = 1e-6


def ratio_bound(n: int, cost: CostSpec = EUCLIDEAN) -> float:
    """
    Lower bound on M/W from M = ||(cos, sin)(theta_n)|| and
    W <= 1/n + ||(1 - cos, sin)(theta_n)||. For the Euclidean norm the
    second term is relaxed to the arc length theta_n.
    """
    if cost.norm == Norm.EUCLIDEAN:
        return n / (1.0 + math.pi / 2.0)
    theta = theta_n(n)
    exact = cost(np.zeros(2), [math.cos(theta), math.sin(theta)])
    chord = cost(np.zeros(2), [1.0 - math.cos(theta), math.sin(theta)])
    return exact / (1.0 / n + chord)


def _measure_row(n: int, cost: CostSpec, settings: Settings) -> Dict[str, Any]:
    mu, nu = mu_m(n), nu_mn(n, n)
    M, _ = mot_value(mu, nu, cost, settings=settings.solver)
    W, _ = ot_value(mu, nu, cost, settings=settings.solver)
    return {"n": n, "M": M, "W": W, "ratio": M / W, "bound": ratio_bound(n, cost)}


def run_ratio(
    nmax: int,
    norm: CostSpec | Norm | str = EUCLIDEAN,
    workers: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> ExperimentReport:
    if nmax < 2:
        raise ParameterError(f"nmax must be >= 2, got {nmax}")
    cost = norm if isinstance(norm, CostSpec) else CostSpec(Norm(norm))
    settings = settings or get_settings()
    workers = workers or settings.workers

    builder = ReportBuilder("ratio", {"nmax": nmax, "norm": cost.norm.value}, settings)
    with experiment_span("ratio"):
        measured = map_ordered(lambda n: _measure_row(n, cost, settings), range(2, nmax + 1), workers)

        rows: List[Dict[str, Any]] = []
        previous = -math.inf
        for entry in measured:
            passed = entry["ratio"] >= entry["bound"] - BOUND_TOL and entry["ratio"] > previous
            previous = entry["ratio"]
            rows.append({**entry, "pass": bool(passed)})

        builder.extend(rows)
        return builder.build()
