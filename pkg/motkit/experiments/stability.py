"""
Failure of MOT stability in the plane.

nu_{3,n} converges to mu_3 P_0 in W1, the martingale couplings pi_n converge
to mu_3(Id, P_0), yet V^M(mu_3, nu_{3,n}) = 1 for every n while the limit
problem has value 1/2.
"""
import logging
import math
from typing import Any, Dict, List, Optional

from motkit.config import Settings, get_settings
from motkit.constructions import kernel_coupling, mu3_P0, mu_m, nu_mn, pi_mn, pi_prime, random_walk_kernel, theta_n
from motkit.errors import ParameterError
from motkit.experiments.parallel import map_ordered
from motkit.experiments.report import ReportBuilder, check_row
from motkit.measure.core import snap_to_support, tv_distance
from motkit.models.report import ExperimentReport
from motkit.telemetry import experiment_span
from motkit.transport import (
    coupling_as_measure,
    coupling_cost,
    coupling_marginals,
    coupling_tv_distance,
    is_martingale_coupling,
    mot_value,
    ot_value,
    transports_along_lines,
    uniqueness_probe,
)

logger = logging.getLogger("motkit.experiments")

VALUE_TOL = 1e-7
GAP_TOL = 1e-6
W1_TOL = 1e-9
SNAP_SLACK = 1e-9
SEPARATION_FLOOR = 0.25


def _rows_for(n: int, seed: int, trials: int, settings: Settings) -> List[Dict[str, Any]]:
    solver = settings.solver
    mu = mu_m(3)
    nu = nu_mn(3, n)
    limit_nu = mu3_P0()
    limit_plan = coupling_as_measure(kernel_coupling(mu, random_walk_kernel(0.0)))
    plan = pi_mn(3, n)
    plan_measure = coupling_as_measure(plan)
    radius = 2.0 * math.sin(math.pi / (4 * n))

    w1, _ = ot_value(nu, limit_nu, settings=solver)
    value, _ = mot_value(mu, nu, settings=solver)
    probe = uniqueness_probe(mu, nu, trials=trials, seed=seed, settings=solver)
    plan_w1, _ = ot_value(plan_measure, limit_plan, settings=solver)
    snapped = snap_to_support(plan_measure, limit_plan.points, radius + SNAP_SLACK)

    return [
        check_row("W1(nu_3n, mu3P0)", w1, math.pi / (2 * n), "<=", W1_TOL, n=n),
        check_row("V^M(mu3, nu_3n)", value, 1.0, "==", VALUE_TOL, n=n),
        check_row("uniqueness spread", max(probe.value_spread, probe.plan_spread), VALUE_TOL, "<=", 0.0, n=n),
        check_row("TV(witness, pi_n)", coupling_tv_distance(probe.witness, plan), 0.0, "==", VALUE_TOL, n=n),
        check_row(
            "pi_n along lines", float(transports_along_lines(plan, theta_n(n))), 1.0, "==", 0.0, n=n,
        ),
        check_row("W1(pi_n, mu3(Id,P0)) on R^4", plan_w1, radius, "<=", W1_TOL, n=n),
        check_row("TV(snap(pi_n), mu3(Id,P0))", tv_distance(snapped, limit_plan), 0.0, "==", W1_TOL, n=n),
        check_row(
            "TV(pi', snap(pi_n))",
            tv_distance(coupling_as_measure(pi_prime()), snapped),
            SEPARATION_FLOOR,
            ">=",
            GAP_TOL,
            n=n,
        ),
    ]


def _limit_rows(final_value: float, seed: int, trials: int, settings: Settings) -> List[Dict[str, Any]]:
    solver = settings.solver
    mu = mu_m(3)
    limit_nu = mu3_P0()
    limit_value, _ = mot_value(mu, limit_nu, settings=solver)
    limit_cost = coupling_cost(kernel_coupling(mu, random_walk_kernel(0.0)))

    witness = pi_prime()
    source, target = coupling_marginals(witness)
    marginal_error = tv_distance(source, mu) + tv_distance(target, limit_nu)
    probe = uniqueness_probe(mu, limit_nu, trials=trials, seed=seed, settings=solver)

    return [
        check_row("V^M(mu3, mu3P0)", limit_value, 0.5, "==", VALUE_TOL),
        check_row("value gap", final_value - limit_value, 0.5, "==", GAP_TOL),
        check_row("cost(mu3(Id,P0))", limit_cost, limit_value, ">", 0.0),
        check_row("cost(pi')", coupling_cost(witness), 0.5, "==", 1e-12),
        check_row("pi' martingale", float(is_martingale_coupling(witness)), 1.0, "==", 0.0),
        check_row("TV(marginals(pi'), (mu3, mu3P0))", marginal_error, 0.0, "==", 1e-12),
        # Both pi' and mu3(Id,P0) are martingale couplings of the limit pair.
        check_row("limit uniqueness spread", probe.value_spread, VALUE_TOL, ">", 0.0),
    ]


def _separation_start(rows: List[Dict[str, Any]], nmax: int) -> Optional[int]:
    """Smallest n0 such that the pi' separation holds for every n in n0..nmax."""
    held = {row["n"]: row["pass"] for row in rows if row["quantity"] == "TV(pi', snap(pi_n))"}
    n0 = None
    for n in range(nmax, 1, -1):
        if not held.get(n, False):
            break
        n0 = n
    return n0


def run_stability(
    nmax: int,
    seed: int = 0,
    trials: int = 20,
    workers: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> ExperimentReport:
    if nmax < 2:
        raise ParameterError(f"nmax must be >= 2, got {nmax}")
    settings = settings or get_settings()
    workers = workers or settings.workers

    builder = ReportBuilder(
        "stability",
        {"nmax": nmax, "seed": seed, "trials": trials, "m": 3},
        settings,
    )
    with experiment_span("stability"):
        per_n = map_ordered(lambda n: _rows_for(n, seed, trials, settings), range(2, nmax + 1), workers)
        rows = [row for block in per_n for row in block]

        w1 = [row["value"] for row in rows if row["quantity"] == "W1(nu_3n, mu3P0)"]
        for n, (previous, current) in enumerate(zip(w1, w1[1:]), start=3):
            rows.append(check_row("W1(nu_3n, mu3P0) decreasing", current, previous, "<", 0.0, n=n))
        rows.sort(key=lambda row: row["n"])

        final_value = next(
            row["value"] for row in rows if row["n"] == nmax and row["quantity"] == "V^M(mu3, nu_3n)"
        )
        builder.extend(rows)
        builder.extend(_limit_rows(final_value, seed, trials, settings))
        builder.params["separation_n0"] = _separation_start(rows, nmax)
        return builder.build()
