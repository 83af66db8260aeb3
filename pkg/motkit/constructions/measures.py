import math

import numpy as np

from motkit.constructions.kernels import random_walk_kernel
from motkit.errors import ParameterError
from motkit.measure.core import apply_kernel, make_measure
from motkit.models.measure import DiscreteMeasure


def theta_n(n: int) -> float:
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return math.pi / (2 * n)


def mu_m(m: int, dim: int = 2) -> DiscreteMeasure:
    """Uniform measure on (1, 0), ..., (m, 0)."""
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    if dim < 2:
        raise ParameterError(f"the construction lives in R^d with d >= 2, got d={dim}")
    points = np.zeros((m, dim))
    points[:, 0] = np.arange(1, m + 1)
    return make_measure(list(points), [1.0 / m] * m)


def nu_mn(m: int, n: int, dim: int = 2) -> DiscreteMeasure:
    """mu_m pushed one random-walk step along angle pi/2n; 2m atoms of mass 1/2m."""
    return apply_kernel(mu_m(m, dim), random_walk_kernel(theta_n(n)))


def mu3_P0() -> DiscreteMeasure:
    """mu_3 P_0 written out: mu_3 - 1/3 ((d1 + d3)/2 - (d0 + d4)/2)."""
    return make_measure(
        [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0), (4.0, 0.0)],
        [1 / 6, 1 / 6, 1 / 3, 1 / 6, 1 / 6],
    )


def default_gamma(size: int = 7, extent: float = 3.0) -> DiscreteMeasure:
    """
    Full-support stand-in: a size x size lattice on [-extent, extent]^2 with
    weights proportional to the standard bivariate normal density.
    """
    if size < 1 or extent <= 0:
        raise ParameterError(f"invalid lattice size={size}, extent={extent}")
    axis = np.linspace(-extent, extent, size)
    xx, yy = np.meshgrid(axis, axis, indexing="ij")
    points = np.column_stack([xx.ravel(), yy.ravel()])
    density = np.exp(-0.5 * np.sum(points ** 2, axis=1))
    return make_measure(list(points), list(density / density.sum()))
