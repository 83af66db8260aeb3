from typing import Optional

import numpy as np

from motkit.config import SolverSettings
from motkit.errors import DimensionMismatchError
from motkit.lp.simplex import feasible
from motkit.measure.core import mean
from motkit.models.measure import DiscreteMeasure
from motkit.transport.mot import martingale_program
from motkit.transport.ot import require_same_dim

MEAN_TOL = 1e-9


def check_convex_order(
    mu: DiscreteMeasure,
    nu: DiscreteMeasure,
    settings: Optional[SolverSettings] = None,
) -> bool:
    """
    mu <=_c nu, decided as feasibility of the martingale coupling LP
    (Strassen's theorem for finitely supported measures).
    """
    require_same_dim(mu, nu)
    program = martingale_program(mu, nu, np.zeros(len(mu) * len(nu)))
    return feasible(program, settings)


def potential(mu: DiscreteMeasure, t: np.ndarray) -> np.ndarray:
    """U_mu(t) = sum_i w_i |t - x_i| on the real line."""
    return np.abs(np.asarray(t)[:, None] - mu.points[:, 0][None, :]) @ mu.weights


def potential_function_check(mu: DiscreteMeasure, nu: DiscreteMeasure, tol: float = MEAN_TOL) -> bool:
    """
    Convex order on the real line: equal means and U_mu <= U_nu. Both
    potentials are piecewise linear with kinks at atoms, so comparing at
    the union of atom locations is exact.
    """
    if mu.dim != 1 or nu.dim != 1:
        raise DimensionMismatchError(
            f"potential functions are defined in dimension 1, got R^{mu.dim} and R^{nu.dim}"
        )
    if abs(float(mean(mu)[0]) - float(mean(nu)[0])) > tol:
        return False
    t = np.concatenate([mu.points[:, 0], nu.points[:, 0]])
    return bool(np.all(potential(mu, t) <= potential(nu, t) + tol))
