"""
Robustness of the construction: parallelogram supports and full-support mixtures.
"""
from typing import Optional

from motkit.config import Settings, get_settings
from motkit.constructions import mixture_variant, mu_m, nu_mn, parallelogram_variant
from motkit.experiments.report import ReportBuilder, check_row
from motkit.models.report import ExperimentReport
from motkit.telemetry import experiment_span
from motkit.transport import check_convex_order, min_mass_within, mot_value, ot_value

NEAR_RADIUS = 1.0 / 3.0
NEAR_TOL = 1e-9
SCALING_TOL = 1e-6


def run_variants(
    m: int,
    n: int,
    grid: int,
    eps: float,
    settings: Optional[Settings] = None,
) -> ExperimentReport:
    settings = settings or get_settings()
    solver = settings.solver
    builder = ReportBuilder("variants", {"m": m, "n": n, "grid": grid, "eps": eps}, settings)

    with experiment_span("variants"):
        mu_t, nu_t = parallelogram_variant(m, n, grid)
        builder.add(check_row("parallelogram convex order", float(check_convex_order(mu_t, nu_t, solver)), 1.0, "==", 0.0))
        near, _ = min_mass_within(mu_t, nu_t, NEAR_RADIUS, settings=solver)
        builder.add(check_row("parallelogram mass within 1/3", near, 0.0, "==", NEAR_TOL))

        mu, nu = mu_m(m), nu_mn(m, n)
        mu_e, nu_e = mixture_variant(m, n, eps)
        w_base, _ = ot_value(mu, nu, settings=solver)
        w_mix, _ = ot_value(mu_e, nu_e, settings=solver)
        m_base, _ = mot_value(mu, nu, settings=solver)
        m_mix, _ = mot_value(mu_e, nu_e, settings=solver)
        builder.add(check_row("mixture W1", w_mix, (1.0 - eps) * w_base, "==", SCALING_TOL))
        builder.add(check_row("mixture M1", m_mix, (1.0 - eps) * m_base, "==", SCALING_TOL))

        return builder.build()
