import logging
from typing import Optional

import numpy as np

from motkit.config import SolverSettings
from motkit.errors import NotInConvexOrder, ParameterError, SolverError
from motkit.lp.simplex import solve
from motkit.models.coupling import EUCLIDEAN, CostSpec, Coupling
from motkit.models.linear_program import LinearProgram, LPStatus
from motkit.models.measure import DiscreteMeasure
from motkit.transport.ot import marginal_constraints, plan_from_primal, require_same_dim

logger = logging.getLogger("motkit.transport")


def barycenter_constraints(mu: DiscreteMeasure, nu: DiscreteMeasure) -> np.ndarray:
    """
    For each source atom i and coordinate r:
        sum_j mass[i, j] * (y_j[r] - x_i[r]) = 0
    """
    k, l, d = len(mu), len(nu), mu.dim
    A = np.zeros((k * d, k * l))
    for i in range(k):
        displacement = nu.points - mu.points[i]  # (l, d)
        A[i * d:(i + 1) * d, i * l:(i + 1) * l] = displacement.T
    return A


def martingale_program(mu: DiscreteMeasure, nu: DiscreteMeasure, objective: np.ndarray) -> LinearProgram:
    require_same_dim(mu, nu)
    A_marg, b_marg = marginal_constraints(mu, nu)
    A_bar = barycenter_constraints(mu, nu)
    A = np.vstack([A_marg, A_bar])
    b = np.concatenate([b_marg, np.zeros(A_bar.shape[0])])
    return LinearProgram(np.asarray(objective, dtype=np.float64).ravel(), A, b)


def mot_program(mu: DiscreteMeasure, nu: DiscreteMeasure, cost: CostSpec = EUCLIDEAN) -> LinearProgram:
    require_same_dim(mu, nu)
    return martingale_program(mu, nu, cost.matrix(mu.points, nu.points))


def _solve_martingale(
    program: LinearProgram,
    mu: DiscreteMeasure,
    nu: DiscreteMeasure,
    settings: Optional[SolverSettings],
) -> tuple[float, Coupling]:
    solution = solve(program, settings)
    if solution.status == LPStatus.INFEASIBLE:
        raise NotInConvexOrder(
            f"No martingale coupling exists (phase-one optimum {solution.phase_one_value:.3e})"
        )
    if not solution.is_optimal:
        raise SolverError(f"Martingale LP reported {solution.status.value}")
    return solution.value, plan_from_primal(mu, nu, solution.primal)


def mot_value(
    mu: DiscreteMeasure,
    nu: DiscreteMeasure,
    cost: CostSpec = EUCLIDEAN,
    settings: Optional[SolverSettings] = None,
) -> tuple[float, Coupling]:
    """
    Value of the martingale transport problem and an optimal martingale plan.
    Raises NotInConvexOrder when mu <=_c nu fails.
    """
    value, plan = _solve_martingale(mot_program(mu, nu, cost), mu, nu, settings)
    logger.debug("MOT value %.12g (%d x %d atoms, %s)", value, len(mu), len(nu), cost.norm.value)
    return value, plan


def min_mass_within(
    mu: DiscreteMeasure,
    nu: DiscreteMeasure,
    radius: float,
    cost: CostSpec = EUCLIDEAN,
    settings: Optional[SolverSettings] = None,
) -> tuple[float, Coupling]:
    """Least mass any martingale coupling puts on pairs with cost(x, y) < radius."""
    if radius <= 0:
        raise ParameterError(f"radius must be positive, got {radius}")
    near = (cost.matrix(mu.points, nu.points) < radius).astype(np.float64)
    return _solve_martingale(martingale_program(mu, nu, near), mu, nu, settings)
