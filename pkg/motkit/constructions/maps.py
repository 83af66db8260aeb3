import math

import numpy as np

from motkit.errors import ParameterError
from motkit.models.measure import AffineMap


def projection_L(theta: float) -> AffineMap:
    """
    Projection of R^2 onto the x-axis parallel to the line through the
    origin at angle theta: (x1, x2) -> x1 - x2 / tan(theta).
    """
    if not 0.0 < theta <= math.pi / 2:
        raise ParameterError(f"theta must lie in (0, pi/2], got {theta}")
    cot = math.cos(theta) / math.sin(theta)
    return AffineMap(np.array([[1.0, -cot]]), np.zeros(1), name=f"L[{theta:.6g}]")


def embedding(dim_from: int = 2, dim_to: int = 3) -> AffineMap:
    """(x1, ..., x_from) -> (x1, ..., x_from, 0, ..., 0)."""
    if dim_from < 1 or dim_to < dim_from:
        raise ParameterError(f"cannot embed R^{dim_from} into R^{dim_to}")
    return AffineMap(np.eye(dim_to, dim_from), np.zeros(dim_to), name=f"iota[{dim_from}->{dim_to}]")
