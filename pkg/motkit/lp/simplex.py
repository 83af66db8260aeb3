"""
Dense two-phase primal simplex with Bland's anti-cycling rule.

Tableau layout: rows 0..m-1 hold B^-1 [A | b]; the last row holds the
reduced costs followed by minus the current objective value. Entering
column is the lowest-index column with negative reduced cost, leaving row
is the minimum-ratio row with the lowest basic index among ties.

The tableau is rebuilt from the original matrix every REFACTOR_INTERVAL
pivots and before any terminal decision, so round-off never accumulates
into the reported basis.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from motkit.config import SolverSettings, get_settings
from motkit.errors import CertificationError, IterationLimitExceeded
from motkit.models.linear_program import LinearProgram, LPSolution, LPStatus
from motkit.telemetry import emit_solve_telemetry

logger = logging.getLogger("motkit.lp")

REFACTOR_INTERVAL = 50
# Entries of B^-1 A below this count as zero when looking for a pivot that
# removes a leftover artificial variable.
DEPENDENT_ROW_TOL = 1e-9


class _Tableau:
    def __init__(
        self,
        A: np.ndarray,
        b: np.ndarray,
        cost: np.ndarray,
        basis: np.ndarray,
        settings: SolverSettings,
        phase: str,
    ):
        self.A = A
        self.b = b
        self.cost = cost
        self.basis = np.array(basis, dtype=np.int64)
        self.settings = settings
        self.phase = phase
        self.T = np.zeros((A.shape[0] + 1, A.shape[1] + 1))
        self.dual = np.zeros(A.shape[0])
        self.stale = 0
        self.refactor()

    @property
    def m(self) -> int:
        return int(self.basis.shape[0])

    @property
    def basic_values(self) -> np.ndarray:
        return self.T[:-1, -1]

    def refactor(self) -> None:
        """Recompute B^-1 [A | b], the duals and the reduced costs from scratch."""
        m = self.m
        if m:
            B = self.A[:, self.basis]
            try:
                self.T[:m] = np.linalg.solve(B, np.column_stack([self.A, self.b]))
                self.dual = np.linalg.solve(B.T, self.cost[self.basis])
            except np.linalg.LinAlgError as e:
                raise CertificationError(f"Basis is singular ({self.phase}): {e}") from e
            self.T[:m, self.basis] = np.eye(m)
        self.T[-1, :-1] = self.cost - self.A.T @ self.dual
        self.T[-1, self.basis] = 0.0
        self.T[-1, -1] = -float(self.cost[self.basis] @ self.basic_values)
        self.stale = 0

    def pivot(self, row: int, col: int) -> None:
        T = self.T
        T[row] /= T[row, col]
        factors = T[:, col].copy()
        factors[row] = 0.0
        T -= np.outer(factors, T[row])
        self.basis[row] = col
        self.stale += 1
        if self.stale >= REFACTOR_INTERVAL:
            self.refactor()

    def run(self, iterations: int) -> tuple[LPStatus, Optional[int], int]:
        """
        Pivot until optimal or unbounded. Returns (status, unbounded column, iterations).
        """
        settings = self.settings
        m = self.m
        while True:
            reduced = self.T[-1, :-1]
            entering = np.flatnonzero(reduced < -settings.feasibility_tol)
            if entering.size == 0:
                if self.stale:
                    self.refactor()
                    continue
                return LPStatus.OPTIMAL, None, iterations

            j = int(entering[0])
            column = self.T[:m, j]
            eligible = np.flatnonzero(column > settings.pivot_tol)
            if eligible.size == 0:
                if self.stale:
                    self.refactor()
                    continue
                return LPStatus.UNBOUNDED, j, iterations

            # Basic values a hair below zero count as zero in the ratio test.
            ratios = np.maximum(self.T[eligible, -1], 0.0) / column[eligible]
            best = ratios.min()
            ties = eligible[ratios <= best + settings.pivot_tol * (1.0 + best)]
            row = int(ties[np.argmin(self.basis[ties])])

            self.pivot(row, j)
            iterations += 1
            if iterations >= settings.max_iterations:
                raise IterationLimitExceeded(iterations, self.phase)


@dataclass
class _PhaseOne:
    tableau: _Tableau
    A: np.ndarray
    b: np.ndarray
    sign: np.ndarray
    value: float
    iterations: int


def _phase_one(lp: LinearProgram, settings: SolverSettings) -> _PhaseOne:
    A = np.array(lp.constraint_matrix, dtype=np.float64)
    b = np.array(lp.rhs, dtype=np.float64)
    m, n = A.shape

    sign = np.where(b < 0, -1.0, 1.0)
    A *= sign[:, None]
    b *= sign

    tableau = _Tableau(
        np.hstack([A, np.eye(m)]),
        b,
        np.concatenate([np.zeros(n), np.ones(m)]),
        np.arange(n, n + m),
        settings,
        "phase one",
    )
    _, _, iterations = tableau.run(0)
    value = max(0.0, -float(tableau.T[-1, -1]))
    return _PhaseOne(tableau, A, b, sign, value, iterations)


def _farkas_certificate(p1: _PhaseOne, n: int) -> np.ndarray:
    """
    Phase-one dual y (in the caller's row signs): A^T y <= 0 and b @ y > 0
    whenever the program is infeasible.
    """
    m = p1.tableau.m
    y = 1.0 - p1.tableau.T[-1, n:n + m]
    return y * p1.sign


def _drop_artificials(p1: _PhaseOne, n: int) -> np.ndarray:
    """
    Pivot basic artificials out of the phase-one basis. Returns the original
    constraint indices whose artificial could not leave: those rows are
    linear combinations of the others.
    """
    tableau = p1.tableau
    tableau.refactor()
    redundant = []
    for r in range(tableau.m):
        if tableau.basis[r] < n:
            continue
        row = np.abs(tableau.T[r, :n])
        if row.size:
            row[tableau.basis[tableau.basis < n]] = 0.0
            j = int(np.argmax(row))
            if row[j] > DEPENDENT_ROW_TOL:
                tableau.pivot(r, j)
                continue
        redundant.append(int(tableau.basis[r]) - n)
    return np.array(sorted(redundant), dtype=np.int64)


def feasible(lp: LinearProgram, settings: Optional[SolverSettings] = None) -> bool:
    """True iff the phase-one optimum is at most the phase-one tolerance."""
    settings = settings or get_settings().solver
    if lp.nrows == 0:
        return True
    return _phase_one(lp, settings).value <= settings.phase_one_tol


def solve(lp: LinearProgram, settings: Optional[SolverSettings] = None) -> LPSolution:
    settings = settings or get_settings().solver
    m, n = lp.nrows, lp.nvars
    c = np.asarray(lp.objective)

    if m == 0:
        return _solve_unconstrained(lp, settings)

    p1 = _phase_one(lp, settings)
    if p1.value > settings.phase_one_tol:
        logger.debug("LP infeasible: phase-one optimum %.3e (%d rows, %d vars)", p1.value, m, n)
        emit_solve_telemetry("infeasible", p1.iterations, m, n)
        x = np.zeros(n)
        basis = p1.tableau.basis
        real = basis < n
        x[basis[real]] = p1.tableau.basic_values[real]
        return LPSolution(
            status=LPStatus.INFEASIBLE,
            value=float("inf"),
            primal=x,
            dual=_farkas_certificate(p1, n),
            iterations=p1.iterations,
            phase_one_value=p1.value,
        )

    redundant = _drop_artificials(p1, n)
    if redundant.size:
        logger.debug("Dropped redundant constraints %s", redundant.tolist())
    kept = np.setdiff1d(np.arange(m), redundant)
    basis = p1.tableau.basis[p1.tableau.basis < n]

    phase_two = _Tableau(p1.A[kept], p1.b[kept], c, basis, settings, "phase two")
    status, unbounded_col, iterations = phase_two.run(p1.iterations)

    x = np.zeros(n)
    x[phase_two.basis] = phase_two.basic_values

    if status == LPStatus.UNBOUNDED:
        ray = np.zeros(n)
        ray[unbounded_col] = 1.0
        ray[phase_two.basis] = -phase_two.T[:-1, unbounded_col]
        logger.debug("LP unbounded along column %d", unbounded_col)
        emit_solve_telemetry("unbounded", iterations, m, n)
        return LPSolution(
            status=LPStatus.UNBOUNDED,
            value=float("-inf"),
            primal=np.maximum(x, 0.0),
            dual=np.zeros(m),
            iterations=iterations,
            phase_one_value=p1.value,
            ray=ray,
        )

    y = np.zeros(m)
    y[kept] = phase_two.dual * p1.sign[kept]
    x, residual, gap = _certify(lp, x, y, settings)

    value = float(c @ x)
    logger.debug(
        "LP optimal: value=%.12g iterations=%d rows=%d vars=%d gap=%.2e",
        value, iterations, m, n, gap,
    )
    emit_solve_telemetry("optimal", iterations, m, n)
    return LPSolution(
        status=LPStatus.OPTIMAL,
        value=value,
        primal=x,
        dual=y,
        iterations=iterations,
        phase_one_value=p1.value,
        duality_gap=gap,
        residual=residual,
    )


def _certify(
    lp: LinearProgram,
    x: np.ndarray,
    y: np.ndarray,
    settings: SolverSettings,
) -> tuple[np.ndarray, float, float]:
    """
    Check a candidate primal/dual pair against the original program:
    x >= 0, A x = b, A^T y <= c and c.x = b.y, all within tolerance.
    Returns the primal with round-off negatives cleared, the residual and the gap.
    """
    A, b, c = lp.constraint_matrix, lp.rhs, lp.objective

    lowest = float(x.min()) if x.size else 0.0
    if lowest < -settings.feasibility_tol:
        logger.error("Basic solution has a negative entry %.3e", lowest)
        raise CertificationError(f"Primal entry {lowest:.3e} is negative")
    x = np.maximum(x, 0.0)

    residual = float(np.max(np.abs(A @ x - b)))
    if residual > settings.feasibility_tol:
        logger.error("Primal residual %.3e exceeds %.1e", residual, settings.feasibility_tol)
        raise CertificationError(f"Primal residual {residual:.3e} exceeds tolerance")

    slack = c - A.T @ y
    worst = float(slack.min()) if slack.size else 0.0
    scale = 1.0 + (float(np.abs(c).max()) if c.size else 0.0)
    if worst < -settings.feasibility_tol * scale:
        logger.error("Dual infeasibility %.3e exceeds %.1e", -worst, settings.feasibility_tol * scale)
        raise CertificationError(f"Dual constraint violated by {-worst:.3e}")

    value = float(c @ x)
    gap = abs(value - float(b @ y))
    if gap > settings.gap_tol * (1.0 + abs(value)):
        logger.error("Duality gap %.3e exceeds relative tolerance %.1e", gap, settings.gap_tol)
        raise CertificationError(f"Duality gap {gap:.3e} exceeds tolerance")
    return x, residual, gap


def _solve_unconstrained(lp: LinearProgram, settings: SolverSettings) -> LPSolution:
    c = np.asarray(lp.objective)
    n = lp.nvars
    improving = np.flatnonzero(c < -settings.feasibility_tol)
    if improving.size:
        ray = np.zeros(n)
        ray[improving[0]] = 1.0
        emit_solve_telemetry("unbounded", 0, 0, n)
        return LPSolution(LPStatus.UNBOUNDED, float("-inf"), np.zeros(n), np.zeros(0), ray=ray)
    emit_solve_telemetry("optimal", 0, 0, n)
    return LPSolution(LPStatus.OPTIMAL, 0.0, np.zeros(n), np.zeros(0))
