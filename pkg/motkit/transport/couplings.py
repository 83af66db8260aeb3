"""
Inspection and transformation of transport plans.
"""
import math

import numpy as np

from motkit.constructions.maps import projection_L
from motkit.errors import DimensionMismatchError, ParameterError
from motkit.measure.core import CONSOLIDATE_TOL, cluster_points, consolidate, tv_distance
from motkit.models.coupling import EUCLIDEAN, CostSpec, Coupling
from motkit.models.measure import DiscreteMeasure


def is_martingale_coupling(plan: Coupling, tol: float = 1e-9) -> bool:
    """
    Every source row with mass r_i > tol has barycenter x_i:
        || sum_j mass[i, j] y_j - r_i x_i ||_inf <= tol * r_i
    """
    row_mass = plan.mass.sum(axis=1)
    first_moment = plan.mass @ plan.target_atoms
    drift = np.abs(first_moment - row_mass[:, None] * plan.source_atoms).max(axis=1)
    charged = row_mass > tol
    return bool(np.all(drift[charged] <= tol * row_mass[charged]))


def coupling_marginals(plan: Coupling) -> tuple[DiscreteMeasure, DiscreteMeasure]:
    source = DiscreteMeasure(plan.source_atoms, plan.mass.sum(axis=1))
    target = DiscreteMeasure(plan.target_atoms, plan.mass.sum(axis=0))
    return consolidate(source), consolidate(target)


def coupling_cost(plan: Coupling, cost: CostSpec = EUCLIDEAN) -> float:
    return float(np.sum(plan.mass * cost.matrix(plan.source_atoms, plan.target_atoms)))


def identity_coupling(mu: DiscreteMeasure) -> Coupling:
    """mu(Id, Id): every atom stays where it is."""
    return Coupling(mu.points, mu.points, np.diag(mu.weights))


def coupling_as_measure(plan: Coupling) -> DiscreteMeasure:
    """The plan as a measure on R^d x R^d = R^{2d}; zero-mass pairs are dropped."""
    i, j = np.nonzero(plan.mass > 0)
    points = np.hstack([plan.source_atoms[i], plan.target_atoms[j]])
    return DiscreteMeasure(points, plan.mass[i, j])


def coupling_tv_distance(a: Coupling, b: Coupling, tol: float = CONSOLIDATE_TOL) -> float:
    return tv_distance(coupling_as_measure(a), coupling_as_measure(b), tol)


def consolidate_coupling(plan: Coupling, tol: float = CONSOLIDATE_TOL) -> Coupling:
    """Merge coinciding source atoms (summing rows) and target atoms (summing columns)."""
    source, source_labels = cluster_points(plan.source_atoms, tol)
    target, target_labels = cluster_points(plan.target_atoms, tol)
    mass = np.zeros((source.shape[0], target.shape[0]))
    np.add.at(mass, (source_labels[:, None], target_labels[None, :]), plan.mass)
    return Coupling(source, target, mass)


def project_coupling(plan: Coupling, theta: float) -> Coupling:
    """
    (L_theta x L_theta)# plan for a planar plan, with coinciding projected
    atoms merged. L_theta is linear, so martingale plans stay martingale.
    """
    if plan.dim != 2:
        raise DimensionMismatchError(f"project_coupling needs a planar plan, got R^{plan.dim}")
    if not 0.0 < theta <= math.pi / 2:
        raise ParameterError(f"theta must lie in (0, pi/2], got {theta}")
    L = projection_L(theta)
    projected = Coupling(L(plan.source_atoms), L(plan.target_atoms), plan.mass)
    return consolidate_coupling(projected)


def transports_along_lines(plan: Coupling, theta: float, tol: float = 1e-9) -> bool:
    """True iff every charged pair (x, y) satisfies |L_theta(x) - L_theta(y)| <= tol."""
    L = projection_L(theta)
    gap = np.abs(L(plan.source_atoms)[:, 0][:, None] - L(plan.target_atoms)[:, 0][None, :])
    return bool(np.all(gap[plan.mass > tol] <= tol))
