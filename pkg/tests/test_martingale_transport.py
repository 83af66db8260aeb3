import numpy as np
import pytest

from motkit.constructions import mu3_P0, mu_m, nu_mn, parallelogram_variant
from motkit.errors import NotInConvexOrder, ParameterError
from motkit.measure.core import tv_distance
from motkit.models.coupling import CostSpec, Norm
from motkit.transport import (
    coupling_cost,
    coupling_marginals,
    is_martingale_coupling,
    min_mass_within,
    mot_program,
    mot_value,
    ot_value,
)
from tests.fixtures.measures import oracle_instances

VALUE_TOL = 1e-7
MARGINAL_TOL = 1e-8


@pytest.mark.parametrize("n", range(2, 11))
def test_unit_value_along_the_diagonal_family(n):
    """M1(mu_n, nu_{n,n}) = 1."""
    mu, nu = mu_m(n), nu_mn(n, n)
    value, plan = mot_value(mu, nu)
    assert value == pytest.approx(1.0, abs=VALUE_TOL)
    assert is_martingale_coupling(plan)
    assert np.max(np.abs(plan.mass.sum(axis=1) - mu.weights)) <= MARGINAL_TOL
    assert np.max(np.abs(plan.mass.sum(axis=0) - nu.weights)) <= MARGINAL_TOL


def test_limit_problem_has_value_one_half():
    value, plan = mot_value(mu_m(3), mu3_P0())
    assert value == pytest.approx(0.5, abs=VALUE_TOL)
    assert coupling_cost(plan) == pytest.approx(0.5, abs=VALUE_TOL)

    source, target = coupling_marginals(plan)
    assert tv_distance(source, mu_m(3)) == pytest.approx(0.0, abs=1e-9)
    assert tv_distance(target, mu3_P0()) == pytest.approx(0.0, abs=1e-9)


def test_value_under_other_norms_is_the_step_length():
    theta = np.pi / 6
    value, _ = mot_value(mu_m(3), nu_mn(3, 3), CostSpec(Norm.L1))
    assert value == pytest.approx(np.cos(theta) + np.sin(theta), abs=VALUE_TOL)
    value, _ = mot_value(mu_m(3), nu_mn(3, 3), CostSpec(Norm.LINF))
    assert value == pytest.approx(np.cos(theta), abs=VALUE_TOL)


def test_reversed_pair_has_no_martingale_coupling():
    with pytest.raises(NotInConvexOrder):
        mot_value(nu_mn(3, 3), mu_m(3))


def test_mot_program_stacks_barycenter_rows():
    lp = mot_program(mu_m(2), nu_mn(2, 2))
    assert lp.nvars == 2 * 4
    assert lp.nrows == (2 + 4) + 2 * 2


@pytest.mark.parametrize("grid", [1, 2, 3])
def test_parallelogram_keeps_mass_away_from_the_diagonal(grid):
    mu, nu = parallelogram_variant(2, 2, grid)
    near, plan = min_mass_within(mu, nu, 1.0 / 3.0)
    assert near == pytest.approx(0.0, abs=1e-9)
    assert is_martingale_coupling(plan)


def test_min_mass_within_needs_positive_radius():
    with pytest.raises(ParameterError):
        min_mass_within(mu_m(2), nu_mn(2, 2), 0.0)


def test_martingale_constraint_never_lowers_the_cost():
    for mu, nu in oracle_instances(30):
        mot, _ = mot_value(mu, nu)
        ot, _ = ot_value(mu, nu)
        assert mot >= ot - 1e-9


@pytest.mark.parametrize("norm", [Norm.EUCLIDEAN, Norm.L1, Norm.LINF])
def test_parallelogram_plan_marginals_under_each_norm(norm):
    mu, nu = parallelogram_variant(2, 2, 2)
    value, plan = mot_value(mu, nu, CostSpec(norm))
    assert value > 0
    assert is_martingale_coupling(plan)
    assert np.max(np.abs(plan.mass.sum(axis=1) - mu.weights)) <= MARGINAL_TOL
    assert np.max(np.abs(plan.mass.sum(axis=0) - nu.weights)) <= MARGINAL_TOL
