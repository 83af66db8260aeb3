"""
Variants of the basic construction: Dirac rows replaced by (discretized)
uniform parallelograms, and mixtures with a full-support measure.
"""
import math
from typing import Optional

import numpy as np

from motkit.constructions.measures import default_gamma, mu_m, nu_mn, theta_n
from motkit.errors import ParameterError
from motkit.measure.core import consolidate, mixture
from motkit.models.measure import DiscreteMeasure


def parallelogram_lattice(m: int, n: int, grid: int) -> np.ndarray:
    """
    grid x grid cell centres of the parallelogram with corners
    -v, -v + (m, 0), v + (m, 0), v, where v = (cos, sin)(pi/2n) / 3.
    """
    if grid < 1:
        raise ParameterError(f"grid must be >= 1, got {grid}")
    theta = theta_n(n)
    v = np.array([math.cos(theta), math.sin(theta)]) / 3.0
    centres = (np.arange(grid) + 0.5) / grid
    s, t = np.meshgrid(centres, centres, indexing="ij")
    s, tau = s.ravel(), 2.0 * t.ravel() - 1.0
    return s[:, None] * np.array([float(m), 0.0]) + tau[:, None] * v


def parallelogram_variant(m: int, n: int, grid: int) -> tuple[DiscreteMeasure, DiscreteMeasure]:
    """
    (mu~, nu~): uniform lattice on the parallelogram, and the even mixture of
    its translates by +3v and -3v.
    """
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    lattice = parallelogram_lattice(m, n, grid)
    theta = theta_n(n)
    shift = np.array([math.cos(theta), math.sin(theta)])  # 3v

    k = lattice.shape[0]
    mu = DiscreteMeasure(lattice, np.full(k, 1.0 / k))
    nu = DiscreteMeasure(
        np.vstack([lattice + shift, lattice - shift]),
        np.full(2 * k, 0.5 / k),
    )
    return consolidate(mu), consolidate(nu)


def mixture_variant(
    m: int,
    n: int,
    eps: float,
    gamma: Optional[DiscreteMeasure] = None,
) -> tuple[DiscreteMeasure, DiscreteMeasure]:
    """((1 - eps) mu_m + eps gamma, (1 - eps) nu_mn + eps gamma)."""
    if not 0.0 < eps < 1.0:
        raise ParameterError(f"eps must lie in (0, 1), got {eps}")
    gamma = gamma if gamma is not None else default_gamma()
    return mixture(eps, mu_m(m, gamma.dim), gamma), mixture(eps, nu_mn(m, n, gamma.dim), gamma)
