from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from motkit.errors import DimensionMismatchError, InvalidMeasureError

# A point of R^d: a 1-d float array of length d.
Point = NDArray[np.float64]

WEIGHT_SUM_TOL = 1e-9


def as_point(coords: ArrayLike) -> Point:
    point = np.asarray(coords, dtype=np.float64).reshape(-1)
    if point.size == 0:
        raise InvalidMeasureError("A point needs at least one coordinate")
    if not np.all(np.isfinite(point)):
        raise InvalidMeasureError(f"Point has non-finite coordinates: {point.tolist()}")
    return point


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.float64, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """
    Finitely many weighted atoms in R^d.

    points has shape (k, dim), weights shape (k,). Arrays are stored
    read-only; every operation returns a new measure.
    """
    points: NDArray[np.float64]
    weights: NDArray[np.float64]
    dim: int = field(init=False)

    def __post_init__(self):
        points = np.asarray(self.points, dtype=np.float64)
        weights = np.asarray(self.weights, dtype=np.float64).reshape(-1)

        if points.ndim != 2:
            raise DimensionMismatchError(f"points must be a (k, d) array, got shape {points.shape}")
        if points.shape[0] != weights.shape[0]:
            raise InvalidMeasureError(
                f"{points.shape[0]} points but {weights.shape[0]} weights"
            )
        if points.shape[0] == 0:
            raise InvalidMeasureError("A probability measure needs at least one atom")
        if points.shape[1] == 0:
            raise DimensionMismatchError("Dimension must be positive")
        if not np.all(np.isfinite(points)):
            raise InvalidMeasureError("Atom coordinates must be finite")
        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise InvalidMeasureError("Weights must be finite and nonnegative")
        total = float(weights.sum())
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidMeasureError(f"Weights sum to {total!r}, expected 1 within {WEIGHT_SUM_TOL}")

        object.__setattr__(self, "points", _frozen(points))
        object.__setattr__(self, "weights", _frozen(weights))
        object.__setattr__(self, "dim", int(points.shape[1]))

    def __len__(self) -> int:
        return int(self.weights.shape[0])

    def atoms(self) -> list[tuple[Point, float]]:
        return [(self.points[i], float(self.weights[i])) for i in range(len(self))]

    def __repr__(self) -> str:
        atoms = ", ".join(
            f"{tuple(round(float(c), 6) for c in p)}:{w:.6g}" for p, w in self.atoms()
        )
        return f"DiscreteMeasure(dim={self.dim}, atoms=[{atoms}])"


@dataclass(frozen=True)
class AtomicKernel:
    """
    Maps a point to a finitely supported probability measure.
    The rule must return a measure of the same dimension as its input.
    """
    rule: Callable[[Point], DiscreteMeasure]
    name: str = "kernel"

    def __call__(self, point: ArrayLike) -> DiscreteMeasure:
        x = as_point(point)
        image = self.rule(x)
        if image.dim != x.shape[0]:
            raise DimensionMismatchError(
                f"Kernel {self.name!r} mapped a point of R^{x.shape[0]} to a measure on R^{image.dim}"
            )
        return image


@dataclass(frozen=True, eq=False)
class AffineMap:
    """x -> linear @ x + shift, from R^linear.shape[1] to R^linear.shape[0]."""
    linear: NDArray[np.float64]
    shift: NDArray[np.float64]
    name: str = "affine"

    def __post_init__(self):
        linear = np.atleast_2d(np.asarray(self.linear, dtype=np.float64))
        shift = np.asarray(self.shift, dtype=np.float64).reshape(-1)
        if shift.shape[0] != linear.shape[0]:
            raise DimensionMismatchError(
                f"shift has length {shift.shape[0]} but the map has output dimension {linear.shape[0]}"
            )
        object.__setattr__(self, "linear", _frozen(linear))
        object.__setattr__(self, "shift", _frozen(shift))

    @property
    def input_dim(self) -> int:
        return int(self.linear.shape[1])

    @property
    def output_dim(self) -> int:
        return int(self.linear.shape[0])

    def __call__(self, points: ArrayLike) -> NDArray[np.float64]:
        arr = np.asarray(points, dtype=np.float64)
        if arr.shape[-1] != self.input_dim:
            raise DimensionMismatchError(
                f"{self.name} expects points of R^{self.input_dim}, got trailing dimension {arr.shape[-1]}"
            )
        return arr @ self.linear.T + self.shift
