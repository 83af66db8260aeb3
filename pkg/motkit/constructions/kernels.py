import math

import numpy as np

from motkit.errors import DimensionMismatchError, ParameterError
from motkit.measure.core import make_measure
from motkit.models.measure import AtomicKernel, DiscreteMeasure, Point


def random_walk_kernel(theta: float) -> AtomicKernel:
    """
    One step of the simple random walk along the line at angle theta to the
    x-axis: x -> 1/2 (delta_{x + u} + delta_{x - u}), u = (cos theta, sin theta).
    In R^d with d > 2 the step lives in the first two coordinates.
    """
    if not 0.0 <= theta <= math.pi / 2:
        raise ParameterError(f"theta must lie in [0, pi/2], got {theta}")
    cos_t, sin_t = math.cos(theta), math.sin(theta)

    def step(x: Point) -> DiscreteMeasure:
        if x.shape[0] < 2:
            raise DimensionMismatchError("The random-walk kernel needs at least two coordinates")
        u = np.zeros_like(x)
        u[0], u[1] = cos_t, sin_t
        return make_measure([x + u, x - u], [0.5, 0.5])

    return AtomicKernel(rule=step, name=f"P[{theta:.6g}]")


def identity_kernel() -> AtomicKernel:
    return AtomicKernel(rule=lambda x: make_measure([x], [1.0]), name="Id")
