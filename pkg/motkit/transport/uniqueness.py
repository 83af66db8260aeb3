"""
Probabilistic certificate that the martingale coupling polytope is a
single point: minimize and maximize random linear objectives over it and
compare. A polytope with two or more points separates min and max for a
generic objective.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from motkit.config import SolverSettings
from motkit.errors import NotInConvexOrder, SolverError
from motkit.lp.simplex import feasible, solve
from motkit.models.coupling import CostSpec, Coupling
from motkit.models.measure import DiscreteMeasure
from motkit.transport.mot import martingale_program
from motkit.transport.ot import plan_from_primal

logger = logging.getLogger("motkit.transport")

AGREEMENT_TOL = 1e-7


@dataclass(frozen=True)
class UniquenessResult:
    unique: bool
    witness: Coupling
    value_spread: float   # largest max - min over the trials
    plan_spread: float    # largest TV distance between any optimal plan and the witness
    trials: int


def trial_objective(nvars: int, seed: int, trial: int, cost_vector: Optional[np.ndarray] = None) -> np.ndarray:
    """Per-trial objective seeded by (seed, trial), independent of execution order."""
    rng = np.random.default_rng([seed, trial])
    objective = rng.standard_normal(nvars)
    if cost_vector is not None:
        objective = objective + cost_vector
    return objective


def uniqueness_probe(
    mu: DiscreteMeasure,
    nu: DiscreteMeasure,
    trials: int = 20,
    seed: int = 0,
    cost: Optional[CostSpec] = None,
    settings: Optional[SolverSettings] = None,
) -> UniquenessResult:
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")

    base = martingale_program(mu, nu, np.zeros(len(mu) * len(nu)))
    if not feasible(base, settings):
        raise NotInConvexOrder("The martingale coupling polytope is empty")

    cost_vector = cost.matrix(mu.points, nu.points).ravel() if cost is not None else None
    witness: Optional[np.ndarray] = None
    value_spread = 0.0
    plan_spread = 0.0

    for t in range(trials):
        g = trial_objective(base.nvars, seed, t, cost_vector)
        low = solve(base.with_objective(g), settings)
        high = solve(base.with_objective(-g), settings)
        if not (low.is_optimal and high.is_optimal):
            raise SolverError(f"Probe objective {t} was not solved to optimality")

        value_spread = max(value_spread, -high.value - low.value)
        if witness is None:
            witness = low.primal
        for x in (low.primal, high.primal):
            plan_spread = max(plan_spread, 0.5 * float(np.abs(x - witness).sum()))

    unique = value_spread <= AGREEMENT_TOL and plan_spread <= AGREEMENT_TOL
    logger.debug(
        "Uniqueness probe: unique=%s value_spread=%.2e plan_spread=%.2e (%d trials)",
        unique, value_spread, plan_spread, trials,
    )
    return UniquenessResult(
        unique=unique,
        witness=plan_from_primal(mu, nu, witness),
        value_spread=value_spread,
        plan_spread=plan_spread,
        trials=trials,
    )
