from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from motkit.errors import DimensionMismatchError


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True, eq=False)
class LinearProgram:
    """
    minimize objective @ x  subject to  constraint_matrix @ x == rhs,  x >= 0
    """
    objective: NDArray[np.float64]
    constraint_matrix: NDArray[np.float64]
    rhs: NDArray[np.float64]

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=np.float64).reshape(-1)
        a = np.asarray(self.constraint_matrix, dtype=np.float64)
        b = np.asarray(self.rhs, dtype=np.float64).reshape(-1)
        if a.size == 0:
            a = np.zeros((b.shape[0], c.shape[0]))
        if a.shape != (b.shape[0], c.shape[0]):
            raise DimensionMismatchError(
                f"constraint_matrix has shape {a.shape}, expected {(b.shape[0], c.shape[0])}"
            )
        for name, value in (("objective", c), ("constraint_matrix", a), ("rhs", b)):
            if not np.all(np.isfinite(value)):
                raise DimensionMismatchError(f"{name} contains non-finite entries")
            value = np.array(value, copy=True)
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def nvars(self) -> int:
        return int(self.objective.shape[0])

    @property
    def nrows(self) -> int:
        return int(self.rhs.shape[0])

    def with_objective(self, objective: ArrayLike) -> "LinearProgram":
        return LinearProgram(objective, self.constraint_matrix, self.rhs)


@dataclass(frozen=True, eq=False)
class LPSolution:
    status: LPStatus
    value: float
    primal: NDArray[np.float64]
    dual: NDArray[np.float64]
    iterations: int = 0
    phase_one_value: float = 0.0
    duality_gap: float = 0.0
    residual: float = 0.0
    # Improving direction of an unbounded program.
    ray: Optional[NDArray[np.float64]] = field(default=None)

    @property
    def is_optimal(self) -> bool:
        return self.status == LPStatus.OPTIMAL
