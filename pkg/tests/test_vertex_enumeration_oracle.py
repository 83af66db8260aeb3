"""
The simplex engine against brute-force vertex enumeration.
"""
import numpy as np
import pytest

from motkit.errors import NotInConvexOrder
from motkit.lp import solve
from motkit.lp.vertex_enumeration import enumerate_vertices_min, independent_rows
from motkit.models.linear_program import LinearProgram
from motkit.transport import mot_program, mot_value, ot_program, ot_value
from tests.fixtures.measures import oracle_instances

ORACLE_TOL = 1e-6


def _random_bounded_lp(rng: np.random.Generator) -> LinearProgram:
    n = int(rng.integers(2, 9))
    m = int(rng.integers(1, min(n, 6) + 1))
    A = rng.integers(-3, 4, size=(m, n)).astype(float)
    x0 = rng.integers(0, 4, size=n).astype(float)
    c = rng.integers(0, 6, size=n).astype(float)
    return LinearProgram(c, A, A @ x0)


def test_random_integer_programs_match_oracle():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        lp = _random_bounded_lp(rng)
        oracle = enumerate_vertices_min(lp)
        assert oracle is not None
        solution = solve(lp)
        assert solution.is_optimal
        assert solution.value == pytest.approx(oracle[0], abs=ORACLE_TOL)


def test_oracle_detects_inconsistent_systems():
    lp = LinearProgram([1.0, 1.0], [[1.0, 1.0], [2.0, 2.0]], [1.0, 3.0])
    assert enumerate_vertices_min(lp) is None


def test_oracle_detects_empty_nonnegative_region():
    lp = LinearProgram([1.0, 1.0], [[1.0, 1.0]], [-1.0])
    assert enumerate_vertices_min(lp) is None


def test_independent_rows_skips_dependent_rows():
    A = np.array([[1.0, 0.0], [2.0, 0.0], [0.0, 1.0]])
    assert independent_rows(A) == [0, 2]


def test_transport_and_martingale_values_match_oracle():
    """100 seeded instances with at most 4 x 4 atoms."""
    for mu, nu in oracle_instances():
        assert len(mu) <= 4 and len(nu) <= 4

        w, _ = ot_value(mu, nu)
        w_oracle = enumerate_vertices_min(ot_program(mu, nu))
        assert w == pytest.approx(w_oracle[0], abs=ORACLE_TOL)

        m, _ = mot_value(mu, nu)
        m_oracle = enumerate_vertices_min(mot_program(mu, nu))
        assert m_oracle is not None
        assert m == pytest.approx(m_oracle[0], abs=ORACLE_TOL)


def test_oracle_agrees_on_missing_martingale_coupling():
    for mu, nu in oracle_instances(count=10):
        if len(nu) > 1:
            with pytest.raises(NotInConvexOrder):
                mot_value(nu, mu)
            assert enumerate_vertices_min(mot_program(nu, mu)) is None
