"""
Brute-force LP oracle: enumerate every basic solution of the equality
system and keep the cheapest feasible one. Exponential in the number of
variables, so only meant for cross-checking the simplex on small instances.
The program is assumed bounded (true for transport polytopes).
"""
import itertools
import logging
from typing import Optional

import numpy as np

from motkit.errors import SolverError
from motkit.models.linear_program import LinearProgram

logger = logging.getLogger("motkit.lp")

MAX_BASES = 2_000_000


def independent_rows(A: np.ndarray, tol: float = 1e-10) -> list[int]:
    rows: list[int] = []
    for i in range(A.shape[0]):
        trial = rows + [i]
        if np.linalg.matrix_rank(A[trial], tol=tol) == len(trial):
            rows = trial
    return rows


def enumerate_vertices_min(
    lp: LinearProgram,
    tol: float = 1e-9,
) -> Optional[tuple[float, np.ndarray]]:
    """
    Returns (value, x) of the best vertex, or None when no basic solution is
    feasible (the program is infeasible).
    """
    A = np.asarray(lp.constraint_matrix)
    b = np.asarray(lp.rhs)
    c = np.asarray(lp.objective)
    n = lp.nvars

    rows = independent_rows(A)
    if np.linalg.matrix_rank(np.column_stack([A, b]), tol=1e-10) > len(rows):
        return None
    r = len(rows)
    if r == 0:
        return 0.0, np.zeros(n)

    n_bases = 1
    for k in range(r):
        n_bases = n_bases * (n - k) // (k + 1)
    if n_bases > MAX_BASES:
        raise SolverError(f"{n_bases} candidate bases exceed the enumeration budget")

    A_r, b_r = A[rows], b[rows]
    combos = np.array(list(itertools.combinations(range(n), r)), dtype=np.int64)
    bases = A_r[:, combos].transpose(1, 0, 2)

    singular_values = np.linalg.svd(bases, compute_uv=False)
    regular = singular_values[:, -1] > 1e-10 * np.maximum(1.0, singular_values[:, 0])
    combos, bases = combos[regular], bases[regular]
    if combos.shape[0] == 0:
        return None

    rhs = np.broadcast_to(b_r, (combos.shape[0], r))[..., None]
    x_basic = np.linalg.solve(bases, rhs)[..., 0]
    feasible = np.all(x_basic >= -tol, axis=1)
    if not feasible.any():
        return None

    combos, x_basic = combos[feasible], x_basic[feasible]
    values = np.sum(c[combos] * x_basic, axis=1)
    best = int(np.argmin(values))

    x = np.zeros(n)
    x[combos[best]] = np.clip(x_basic[best], 0.0, None)
    logger.debug("Vertex enumeration: %d feasible vertices, best value %.12g", combos.shape[0], values[best])
    return float(values[best]), x
