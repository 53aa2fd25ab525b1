import json
import math

import numpy as np
import pytest

from spirallike import (
    ConstantRadius,
    SampledRadius,
    SpiralParams,
    StandardU,
    StandardV,
    UnboundedOrderError,
    check_all,
    check_derivative,
    check_inclusion_boundary,
    check_inclusion_interior,
    check_lipschitz,
    constants,
    dual,
    minimal_order,
    standard_boundary,
)
from spirallike.profiles import random_admissible, random_params, violating
from spirallike.spiral import TWO_PI, lambda_arg, spiral_exp


def geometric_excess(R, p, n0=96, nt=240):
    """Largest ``log|w| - log R(arg_lam w)`` over ``w = w0 * beta(t)``.

    ``w0`` runs over boundary points of ``R`` and ``beta`` parametrizes the
    boundary of U; a positive value means some scaled copy ``w0 U`` pokes out.
    """
    th0 = (np.arange(n0) + 0.37) * TWO_PI / n0
    w0 = spiral_exp(p.lam, R.log_radius(th0), th0)
    t = (np.arange(nt) + 0.5) * TWO_PI / nt
    w = (w0[:, None] * standard_boundary(p, t)[None, :]).ravel()
    return float(np.max(np.log(np.abs(w)) - R.log_radius(lambda_arg(p.lam, w))))


def test_standard_domains_pass_everything(params):
    for R in (StandardU(params), StandardV(params)):
        reps = check_all(R, params, grid=240)
        for name, rep in reps.items():
            assert rep.passed, (R.kind, name, rep.worst_margin)
    # U is extremal: its own inclusion margin is zero up to rounding
    assert abs(check_inclusion_boundary(StandardU(params), params, 240).worst_margin) < 1e-12
    assert abs(check_derivative(StandardU(params), params).worst_margin) < 1e-12


def test_minimal_order_of_standard_domain(params):
    U = StandardU(params)
    assert minimal_order(U, params.lam) == pytest.approx(params.alpha, abs=1e-12)
    assert minimal_order(dual(U), params.lam) == pytest.approx(params.alpha, abs=1e-12)


@pytest.mark.parametrize("lam", [-1.2, -0.4, 0.0, 0.25, 1.0])
def test_minimal_order_of_constant(lam):
    assert minimal_order(ConstantRadius(3.0), lam) == pytest.approx(2 * abs(lam) / math.pi, abs=1e-12)


def test_constant_radius_condition_ii_matches_order():
    lam = 0.5
    a0 = 2 * lam / math.pi
    assert check_derivative(ConstantRadius(), SpiralParams(lam, a0 + 0.01)).passed
    # below the threshold the order is not admissible at all
    with pytest.raises(Exception):
        SpiralParams(lam, a0 - 0.01)


def test_unbounded_order():
    # adjacent knots 2e308 apart: the slope overflows to infinity
    R = SampledRadius(np.array([0, 0, 0, 1e308, -1e308, 0, 0, 0.0]))
    with np.errstate(over="ignore"), pytest.raises(UnboundedOrderError):
        minimal_order(R, 0.1)


def test_random_admissible_pass(rng):
    for _ in range(10):
        p = random_params(rng)
        R = random_admissible(p, rng, 360)
        reps = check_all(R, p)
        assert all(r.passed for r in reps.values()), {k: r.worst_margin for k, r in reps.items()}
        assert geometric_excess(R, p) <= R.tolerance(p)


def test_violating_profiles_fail(rng):
    for _ in range(10):
        p = random_params(rng)
        R = violating(p, rng, 360)
        ii = check_derivative(R, p)
        assert ii.worst_margin <= -0.1 + 1e-12
        assert not ii.passed
        iii = check_inclusion_boundary(R, p)
        assert not iii.passed
        assert not check_lipschitz(R, p).passed
        # the geometric oracle sees the same thing
        assert geometric_excess(R, p) > R.tolerance(p)


def test_interior_margin_is_shifted_boundary_margin(params):
    U = StandardU(params)
    iii = check_inclusion_boundary(U, params, 120)
    iv = check_inclusion_interior(U, params, 120)
    assert iv.worst_margin == pytest.approx(iii.worst_margin - math.log(0.9), abs=1e-12)


def test_report_json_schema(params):
    rep = check_inclusion_boundary(StandardU(params), params, 60)
    d = rep.to_json(180 / math.pi)
    assert set(d) >= {"condition", "pass", "margin", "witness", "grid", "tolerance"}
    assert d["condition"] == "iii" and d["grid"] == 60
    json.dumps(d)
    assert d["witness"]["theta0"] == pytest.approx(rep.witness["theta0"] * 180 / math.pi)


def test_sampled_tolerance(rng):
    p = SpiralParams(0.2, 0.5)
    R = random_admissible(p, rng, 360)
    A, B, _ = constants(p)
    assert R.tolerance(p) == pytest.approx(TWO_PI / 360 * (A - B))
    assert StandardU(p).tolerance(p) == 1e-9
