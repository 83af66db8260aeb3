"""
Values computed in the plane reproduce after lifting everything into R^3.
"""
import math

import pytest

from motkit.constructions import embedding, mu3_P0, mu_m, nu_mn, random_walk_kernel
from motkit.experiments.ratio import run_ratio
from motkit.measure.core import apply_kernel, push
from motkit.transport import mot_value, ot_value

LIFT_TOL = 1e-9


def lift(mu):
    return push(mu, embedding(2, 3))


@pytest.mark.parametrize("n", range(2, 11))
def test_martingale_value_is_unchanged_in_three_dimensions(n):
    flat, _ = mot_value(mu_m(n), nu_mn(n, n))
    lifted, _ = mot_value(lift(mu_m(n)), lift(nu_mn(n, n)))
    assert lifted == pytest.approx(flat, abs=LIFT_TOL)
    assert lifted == pytest.approx(1.0, abs=1e-7)


def test_limit_value_is_unchanged_in_three_dimensions():
    lifted, _ = mot_value(lift(mu_m(3)), lift(mu3_P0()))
    assert lifted == pytest.approx(0.5, abs=1e-7)


@pytest.mark.parametrize("n", range(2, 11))
def test_flat_step_cost_is_unchanged_in_three_dimensions(n):
    mu = mu_m(n, dim=3)
    lifted, _ = ot_value(mu, apply_kernel(mu, random_walk_kernel(0.0)))
    flat, _ = ot_value(mu_m(n), apply_kernel(mu_m(n), random_walk_kernel(0.0)))
    assert lifted == pytest.approx(flat, abs=LIFT_TOL)


@pytest.mark.parametrize("m", [1, 3, 5])
def test_chord_bound_holds_in_three_dimensions(m):
    for k in range(10):
        theta = k * (math.pi / 2) / 9
        base = apply_kernel(mu_m(m, dim=3), random_walk_kernel(0.0))
        tilted = apply_kernel(mu_m(m, dim=3), random_walk_kernel(theta))
        lifted, _ = ot_value(base, tilted)
        flat, _ = ot_value(
            apply_kernel(mu_m(m), random_walk_kernel(0.0)),
            apply_kernel(mu_m(m), random_walk_kernel(theta)),
        )
        assert lifted == pytest.approx(flat, abs=LIFT_TOL)
        assert lifted <= 2 * math.sin(theta / 2) + 1e-8


def test_ratio_rows_are_unchanged_in_three_dimensions():
    flat = run_ratio(5)
    for row in flat.rows:
        n = row["n"]
        M, _ = mot_value(lift(mu_m(n)), lift(nu_mn(n, n)))
        W, _ = ot_value(lift(mu_m(n)), lift(nu_mn(n, n)))
        assert M == pytest.approx(row["M"], abs=LIFT_TOL)
        assert W == pytest.approx(row["W"], abs=LIFT_TOL)
