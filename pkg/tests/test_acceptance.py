"""Acceptance criteria, one test each, at their stated tolerances and time budgets.

Each test prints a single ``PASS``/``FAIL`` line.  Run this file directly
(``python3 tests/test_acceptance.py``) to get just those lines.
"""

import math
import sys
import time

import numpy as np
import pytest

from spirallike import (
    INF,
    ConstantRadius,
    SpiralParams,
    StandardU,
    StandardV,
    beltrami_analytic,
    beltrami_fd,
    boundary_trace,
    check_derivative,
    check_dual_inclusion,
    check_inclusion_boundary,
    check_inclusion_interior,
    constants,
    dilatation_sup,
    dual,
    extend,
    g_map,
    integral_identity,
    map_g,
    minimal_order,
    radius_defect,
    reflect,
    tip,
    tip_prevertex,
)
from spirallike.conformal import trace_grid
from spirallike.domain import _near, knot_grid
from spirallike.profiles import random_admissible, random_params, violating
from spirallike.reflection import FD_STEP
from spirallike.spiral import TWO_PI, spiral_exp

pytestmark = pytest.mark.acceptance

STANDARD_GRID = [
    SpiralParams(lam, a)
    for lam in (-0.6, -0.3, 0.0, 0.3, 0.6)
    for a in (0.25, 0.5, 0.8)
    if abs(lam) < math.pi * a / 2
]


def criterion_1():
    worst = max(abs(dilatation_sup(StandardU(p), p).sup_mu - p.k) for p in STANDARD_GRID)
    return worst <= 1e-12, f"max |sup|mu| - sin(pi a/2)| = {worst:.2e} over {len(STANDARD_GRID)} pairs", 1.0


def criterion_2():
    worst, count = 0.0, 0
    for p in (SpiralParams(0.3, 0.7), SpiralParams(-0.6, 0.5), SpiralParams(0.0, 0.25)):
        U = StandardU(p)
        th = (np.arange(100) + 0.5) * TWO_PI / 100
        # keep every angle clear of the ridges by the finite-difference margin
        near = _near(th, U.ridges(), 10 * FD_STEP * (1 + abs(math.tan(p.lam))))
        th = np.where(near, th + 0.25 * TWO_PI / 100, th)
        offsets = np.linspace(-2.0, 2.0, 100)
        T, S = np.meshgrid(th, offsets)
        w = spiral_exp(p.lam, U.log_radius(T) + S, T).ravel()
        dev = np.abs(beltrami_fd(U, p.lam, w) - beltrami_analytic(U, p.lam, T.ravel()))
        worst = max(worst, float(dev.max()))
        count += dev.size
    return worst <= 1e-6, f"max |mu_fd - mu| = {worst:.2e} on {count} points (step 1e-5)", 5.0


def criterion_3():
    alphas = [round(0.1 * k, 1) for k in range(1, 10)]
    betas = [round(-1.2 + 0.3 * k, 1) for k in range(9)]
    worst = max(integral_identity(a, b).rel_err for a in alphas for b in betas)
    special = integral_identity(0.5, 0.0)
    err = abs(special.lhs - math.pi / math.sqrt(2))
    ok = worst <= 1e-8 and err <= 1e-10
    return ok, f"max rel_err = {worst:.2e}; |lhs(0.5, 0) - pi/sqrt2| = {err:.2e}", 2.0


def criterion_4():
    p = SpiralParams(0.3, 0.7)
    g0 = map_g(p, 0.0)
    g1 = abs(map_g(p, 1.0) - 1)
    defect = float(np.max(radius_defect(boundary_trace(p, 256, 1e-4), p)))
    tip_err = abs(map_g(p, (1 - 1e-4) * np.exp(1j * tip_prevertex(p))) - tip(p))
    ok = g0 == 0 and g1 <= 1e-8 and defect <= 5e-3 and tip_err <= 1e-3
    return ok, f"g(0)={abs(g0):.0e}, |g(1)-1|={g1:.1e}, defect={defect:.2e}, tip={tip_err:.1e}", 10.0


def criterion_5():
    rng = np.random.default_rng(5)
    adm_fail = viol_miss = 0
    weakest_violation = -np.inf
    for _ in range(100):
        p = random_params(rng)
        R = random_admissible(p, rng)
        checks = (check_derivative, check_inclusion_boundary, check_inclusion_interior, check_dual_inclusion)
        adm_fail += not all(c(R, p).passed for c in checks)
    for _ in range(100):
        p = random_params(rng)
        R = violating(p, rng)
        weakest_violation = max(weakest_violation, check_derivative(R, p).worst_margin)
        viol_miss += check_inclusion_boundary(R, p).passed
    ok = adm_fail == 0 and viol_miss == 0 and weakest_violation <= -0.1
    detail = (
        f"admissible failing: {adm_fail}/100; violating passing (iii): {viol_miss}/100; "
        f"weakest (ii) margin {weakest_violation:.3f}"
    )
    return ok, detail, 30.0


def criterion_6():
    rng = np.random.default_rng(6)
    exact = True
    suite = []
    for _ in range(20):
        p = random_params(rng)
        R = random_admissible(p, rng)
        D = dual(dual(R))
        exact &= np.array_equal(D.values, R.values) and D.shift == R.shift
        suite += [(R, p.lam), (violating(p, rng), p.lam)]
    th = np.linspace(0, TWO_PI, 2000, endpoint=False)
    uv = max(float(np.max(np.abs(dual(StandardU(p)).radius(th) - StandardV(p).radius(th)))) for p in STANDARD_GRID)
    suite += [(StandardU(p), p.lam) for p in STANDARD_GRID] + [(ConstantRadius(2.0), 0.4)]
    order_gap = max(abs(minimal_order(dual(R), lam) - minimal_order(R, lam)) for R, lam in suite)
    ok = exact and uv <= 1e-12 and order_gap <= 1e-12
    return ok, f"involution exact={exact}, |dual(U)-V|={uv:.1e}, alpha_min gap={order_gap:.1e}", None


def criterion_7():
    p = SpiralParams(0.3, 0.7)
    U = StandardU(p)
    th = knot_grid(1000) + 1e-3
    b = spiral_exp(p.lam, U.log_radius(th), th)
    fix = float(np.max(np.abs(reflect(U, p.lam, b) - b) / np.abs(b)))
    w = b * np.exp(np.linspace(-4, 4, 1000) + 1j * np.linspace(0, 9, 1000))
    inv = float(np.max(np.abs(reflect(U, p.lam, reflect(U, p.lam, w)) - w) / np.abs(w)))
    f = g_map(p, with_derivative=False)
    z = np.exp(1j * trace_grid(256))
    eps = 1e-4
    jump = float(np.max(np.abs(extend(f, U, p.lam, (1 - eps) * z) - extend(f, U, p.lam, z / (1 - eps)))))
    ends = extend(f, U, p.lam, 0) == 0 and extend(f, U, p.lam, INF) is INF
    ok = fix <= 1e-12 and inv <= 1e-12 and jump <= 1e-2 and ends
    return ok, f"fixed={fix:.1e}, involution={inv:.1e}, jump={jump:.2e}, f(0)=0 f(inf)=inf: {ends}", None


def criterion_8():
    errs = []
    for a in (0.25, 0.5, 0.8):
        p = SpiralParams(0.0, a)
        A, B, ts = constants(p)
        t = math.tan(math.pi * a / 2)
        errs += [abs(A - t), abs(B + t), abs(ts - math.pi)]
        errs.append(dilatation_sup(ConstantRadius(1.5), p, 64).sup_mu)
    red = max(errs)
    order = max(abs(minimal_order(ConstantRadius(0.7), lam) - 2 * abs(lam) / math.pi) for lam in np.linspace(-1.5, 1.5, 31))
    ok = red <= 1e-14 and order <= 1e-10
    return ok, f"lambda=0 reductions off by {red:.1e}; |alpha_min - 2|lam|/pi| = {order:.1e}", None


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def evaluate(n):
    start = time.perf_counter()
    ok, detail, budget = CRITERIA[n - 1]()
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        ok = False
        detail += f" (over budget: {elapsed:.2f}s >= {budget:g}s)"
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} [{elapsed:.2f}s]"
    return ok, line


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, line = evaluate(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in range(1, 9)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
