from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from motkit.errors import DimensionMismatchError, InvalidMeasureError

MASS_TOL = 1e-9


class Norm(str, Enum):
    EUCLIDEAN = "euclidean"
    L1 = "l1"
    LINF = "linf"


_NUMPY_ORD = {
    Norm.EUCLIDEAN: 2,
    Norm.L1: 1,
    Norm.LINF: np.inf,
}


@dataclass(frozen=True)
class CostSpec:
    """Transport cost c(x, y) = ||y - x|| for the chosen norm."""
    norm: Norm = Norm.EUCLIDEAN

    def __post_init__(self):
        object.__setattr__(self, "norm", Norm(self.norm))

    def __call__(self, x: ArrayLike, y: ArrayLike) -> float:
        diff = np.asarray(y, dtype=np.float64) - np.asarray(x, dtype=np.float64)
        return float(np.linalg.norm(diff.reshape(-1), ord=_NUMPY_ORD[self.norm]))

    def matrix(self, sources: ArrayLike, targets: ArrayLike) -> NDArray[np.float64]:
        """Pairwise cost matrix, shape (len(sources), len(targets))."""
        xs = np.asarray(sources, dtype=np.float64)
        ys = np.asarray(targets, dtype=np.float64)
        diff = ys[None, :, :] - xs[:, None, :]
        return np.linalg.norm(diff, ord=_NUMPY_ORD[self.norm], axis=-1)


EUCLIDEAN = CostSpec(Norm.EUCLIDEAN)


@dataclass(frozen=True, eq=False)
class Coupling:
    """
    A transport plan between finitely many source and target atoms.
    mass[i, j] is the mass sent from source_atoms[i] to target_atoms[j].
    """
    source_atoms: NDArray[np.float64]
    target_atoms: NDArray[np.float64]
    mass: NDArray[np.float64]

    def __post_init__(self):
        source = np.atleast_2d(np.asarray(self.source_atoms, dtype=np.float64))
        target = np.atleast_2d(np.asarray(self.target_atoms, dtype=np.float64))
        mass = np.asarray(self.mass, dtype=np.float64)

        if source.shape[1] != target.shape[1]:
            raise DimensionMismatchError(
                f"Source atoms live in R^{source.shape[1]}, target atoms in R^{target.shape[1]}"
            )
        if mass.shape != (source.shape[0], target.shape[0]):
            raise DimensionMismatchError(
                f"mass has shape {mass.shape}, expected {(source.shape[0], target.shape[0])}"
            )
        if not np.all(np.isfinite(mass)) or np.any(mass < -MASS_TOL):
            raise InvalidMeasureError("Coupling mass must be finite and nonnegative")
        total = float(mass.sum())
        if abs(total - 1.0) > MASS_TOL:
            raise InvalidMeasureError(f"Coupling has total mass {total!r}, expected 1")

        for name, array in (("source_atoms", source), ("target_atoms", target), ("mass", np.clip(mass, 0.0, None))):
            array = np.array(array, copy=True)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def dim(self) -> int:
        return int(self.source_atoms.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.mass.shape
