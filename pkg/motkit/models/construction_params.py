from dataclasses import dataclass

from motkit.errors import ParameterError


@dataclass(frozen=True)
class ConstructionParams:
    m: int = 3          # number of source atoms
    n: int = 3          # angle denominator, theta_n = pi / 2n
    eps: float = 0.3    # mixture weight, strictly between 0 and 1
    grid: int = 2       # lattice points per parallelogram axis

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError(f"m must be >= 1, got {self.m}")
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if not 0.0 < self.eps < 1.0:
            raise ParameterError(f"eps must lie in (0, 1), got {self.eps}")
        if self.grid < 1:
            raise ParameterError(f"grid must be >= 1, got {self.grid}")
