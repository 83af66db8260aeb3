"""
Operations on finitely supported probability measures.

All functions are pure: inputs are never modified and a new measure is
returned. Atom merging goes through consolidate(), whose representatives
are the lexicographically smallest points of each merge group.
"""
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from motkit.errors import DimensionMismatchError, InvalidMeasureError, ParameterError
from motkit.models.measure import AffineMap, AtomicKernel, DiscreteMeasure, Point, as_point

CONSOLIDATE_TOL = 1e-9


def cluster_points(points: NDArray[np.float64], tol: float) -> tuple[NDArray[np.float64], NDArray[np.int64]]:
    """
    Group points that lie within tol (Euclidean) of a group representative.

    Points are visited in lexicographic order and join the first existing
    representative within tol, so representatives are the lexicographically
    smallest members. Returns (representatives, label per input point).
    """
    if tol < 0:
        raise ParameterError(f"tol must be >= 0, got {tol}")
    points = np.asarray(points, dtype=np.float64)
    order = np.lexsort(points.T[::-1])
    labels = np.empty(points.shape[0], dtype=np.int64)
    reps: list[NDArray[np.float64]] = []

    for idx in order:
        p = points[idx]
        if reps:
            dist = np.linalg.norm(np.asarray(reps) - p, axis=1)
            hits = np.flatnonzero(dist <= tol)
            if hits.size:
                labels[idx] = int(hits[0])
                continue
        labels[idx] = len(reps)
        reps.append(p)

    return np.asarray(reps, dtype=np.float64).reshape(-1, points.shape[1]), labels


def consolidate(mu: DiscreteMeasure, tol: float = CONSOLIDATE_TOL) -> DiscreteMeasure:
    reps, labels = cluster_points(mu.points, tol)
    weights = np.bincount(labels, weights=mu.weights, minlength=reps.shape[0])
    return DiscreteMeasure(reps, weights)


def make_measure(points: Sequence[ArrayLike], weights: Sequence[float]) -> DiscreteMeasure:
    """Build a measure from atoms as given; duplicates are kept."""
    if len(points) != len(weights):
        raise InvalidMeasureError(f"{len(points)} points but {len(weights)} weights")
    if len(points) == 0:
        raise InvalidMeasureError("A probability measure needs at least one atom")

    coords = [as_point(p) for p in points]
    dim = coords[0].shape[0]
    for p in coords:
        if p.shape[0] != dim:
            raise DimensionMismatchError(
                f"Points of different dimensions: {dim} and {p.shape[0]}"
            )
    return DiscreteMeasure(np.vstack(coords), np.asarray(weights, dtype=np.float64))


def apply_kernel(mu: DiscreteMeasure, kernel: AtomicKernel) -> DiscreteMeasure:
    """The mixture sum_i w_i K(x_i), consolidated."""
    points = []
    weights = []
    for x, w in mu.atoms():
        image = kernel(x)
        if image.dim != mu.dim:
            raise DimensionMismatchError(
                f"Kernel {kernel.name!r} produced a measure on R^{image.dim} from R^{mu.dim}"
            )
        points.append(image.points)
        weights.append(w * image.weights)

    mixed = DiscreteMeasure(np.vstack(points), np.concatenate(weights))
    return consolidate(mixed)


def mean(mu: DiscreteMeasure) -> Point:
    return mu.weights @ mu.points


def mixture(eps: float, a: DiscreteMeasure, b: DiscreteMeasure) -> DiscreteMeasure:
    """(1 - eps) a + eps b, consolidated. A component with zero weight contributes no atoms."""
    if not 0.0 <= eps <= 1.0:
        raise ParameterError(f"eps must lie in [0, 1], got {eps}")
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Cannot mix measures on R^{a.dim} and R^{b.dim}")

    parts = [(1.0 - eps, a), (eps, b)]
    points = [m.points for factor, m in parts if factor > 0]
    weights = [factor * m.weights for factor, m in parts if factor > 0]
    return consolidate(DiscreteMeasure(np.vstack(points), np.concatenate(weights)))


def pushforward_affine(mu: DiscreteMeasure, linear: ArrayLike, shift: ArrayLike) -> DiscreteMeasure:
    affine = AffineMap(linear, shift)
    if affine.input_dim != mu.dim:
        raise DimensionMismatchError(
            f"Map expects R^{affine.input_dim} but the measure lives on R^{mu.dim}"
        )
    return consolidate(DiscreteMeasure(affine(mu.points), mu.weights))


def push(mu: DiscreteMeasure, affine: AffineMap) -> DiscreteMeasure:
    return pushforward_affine(mu, affine.linear, affine.shift)


def tv_distance(a: DiscreteMeasure, b: DiscreteMeasure, tol: float = CONSOLIDATE_TOL) -> float:
    """Half the l1 distance between the mass vectors on the merged support."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Cannot compare measures on R^{a.dim} and R^{b.dim}")
    points = np.vstack([a.points, b.points])
    signed = np.concatenate([a.weights, -b.weights])
    reps, labels = cluster_points(points, tol)
    diff = np.bincount(labels, weights=signed, minlength=reps.shape[0])
    return 0.5 * float(np.abs(diff).sum())


def snap_to_support(mu: DiscreteMeasure, support: ArrayLike, radius: float) -> DiscreteMeasure:
    """Move every atom within radius of a support point onto the nearest one."""
    if radius < 0:
        raise ParameterError(f"radius must be >= 0, got {radius}")
    targets = np.atleast_2d(np.asarray(support, dtype=np.float64))
    if targets.shape[1] != mu.dim:
        raise DimensionMismatchError(
            f"Support lives in R^{targets.shape[1]} but the measure lives on R^{mu.dim}"
        )
    dist = np.linalg.norm(mu.points[:, None, :] - targets[None, :, :], axis=-1)
    nearest = dist.argmin(axis=1)
    snapped = mu.points.copy()
    close = dist[np.arange(len(mu)), nearest] <= radius
    snapped[close] = targets[nearest[close]]
    return consolidate(DiscreteMeasure(snapped, mu.weights))
