import logging
from typing import Optional

import numpy as np

from motkit.config import SolverSettings
from motkit.errors import DimensionMismatchError, SolverError
from motkit.lp.simplex import solve
from motkit.models.coupling import EUCLIDEAN, CostSpec, Coupling
from motkit.models.linear_program import LinearProgram
from motkit.models.measure import DiscreteMeasure

logger = logging.getLogger("motkit.transport")


def require_same_dim(mu: DiscreteMeasure, nu: DiscreteMeasure) -> None:
    if mu.dim != nu.dim:
        raise DimensionMismatchError(f"mu lives on R^{mu.dim} but nu lives on R^{nu.dim}")


def marginal_constraints(mu: DiscreteMeasure, nu: DiscreteMeasure) -> tuple[np.ndarray, np.ndarray]:
    """
    Row-sum and column-sum equations over the row-major variables mass[i, j].
    """
    k, l = len(mu), len(nu)
    rows = np.kron(np.eye(k), np.ones((1, l)))
    cols = np.kron(np.ones((1, k)), np.eye(l))
    return np.vstack([rows, cols]), np.concatenate([mu.weights, nu.weights])


def ot_program(mu: DiscreteMeasure, nu: DiscreteMeasure, cost: CostSpec = EUCLIDEAN) -> LinearProgram:
    require_same_dim(mu, nu)
    A, b = marginal_constraints(mu, nu)
    objective = cost.matrix(mu.points, nu.points).ravel()
    return LinearProgram(objective, A, b)


def plan_from_primal(mu: DiscreteMeasure, nu: DiscreteMeasure, primal: np.ndarray) -> Coupling:
    return Coupling(mu.points, nu.points, primal.reshape(len(mu), len(nu)))


def ot_value(
    mu: DiscreteMeasure,
    nu: DiscreteMeasure,
    cost: CostSpec = EUCLIDEAN,
    settings: Optional[SolverSettings] = None,
) -> tuple[float, Coupling]:
    """Minimal transport cost and an optimal plan. With the Euclidean norm this is W1."""
    solution = solve(ot_program(mu, nu, cost), settings)
    if not solution.is_optimal:
        # The product coupling is always feasible and costs are nonnegative.
        raise SolverError(f"Transport LP reported {solution.status.value}")
    logger.debug("OT value %.12g (%d x %d atoms, %s)", solution.value, len(mu), len(nu), cost.norm.value)
    return solution.value, plan_from_primal(mu, nu, solution.primal)
