import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spirallike import ConstraintError, OriginError, decompose, lambda_arg, spiral_point, spiral_segment, to_log
from spirallike.spiral import TWO_PI

lams = st.floats(-1.5, 1.5)
radii = st.floats(1e-6, 1e6)
angles = st.floats(-20.0, 20.0)


@given(lams, radii, radii, angles, angles)
def test_multiplicative(lam, r1, r2, t1, t2):
    lhs = spiral_point(lam, r1 * r2, t1 + t2)
    rhs = spiral_point(lam, r1, t1) * spiral_point(lam, r2, t2)
    assert abs(lhs - rhs) <= 1e-12 * abs(lhs) * (1 + abs(math.tan(lam)) * 30)


@given(lams, radii, angles)
def test_reciprocal(lam, r, t):
    assert abs(spiral_point(lam, 1 / r, -t) * spiral_point(lam, r, t) - 1) < 1e-9


@given(lams, radii, st.floats(0.0, 6.28))
@settings(max_examples=200)
def test_decompose_round_trip(lam, r, t):
    w = spiral_point(lam, r, t)
    rr, tt = decompose(lam, w)
    assert rr == pytest.approx(r, rel=1e-12)
    d = abs(tt - t) % TWO_PI
    assert min(d, TWO_PI - d) < 1e-8 * (1 + abs(math.tan(lam) * math.log(r)))


def test_lambda_zero_is_polar():
    w = 3 * cmath.exp(1.2j)
    assert decompose(0.0, w) == pytest.approx((3.0, 1.2))


def test_spiral_through_one_has_zero_argument():
    lam = 0.7
    t = np.linspace(-5, 5, 101)
    w = np.exp(np.exp(1j * lam) * t)
    th = lambda_arg(lam, w)
    assert np.all(np.minimum(th, TWO_PI - th) < 1e-12)


def test_lambda_arg_range():
    w = np.exp(np.random.default_rng(1).normal(size=50) * 3 + 1j * np.linspace(-10, 10, 50))
    th = lambda_arg(0.4, w)
    assert np.all((th >= 0) & (th < TWO_PI))


def test_origin_and_lambda_errors():
    with pytest.raises(OriginError):
        lambda_arg(0.2, 0)
    with pytest.raises(OriginError):
        decompose(0.2, 0)
    with pytest.raises(OriginError):
        to_log(0)
    with pytest.raises(ConstraintError):
        spiral_point(math.pi / 2, 1, 0)
    with pytest.raises(ConstraintError):
        spiral_point(0.1, -1, 0)
    assert spiral_point(0.3, 0.0, 1.0) == 0


def test_to_log():
    z = -1 + 1j
    c = to_log(z)
    assert c.X == pytest.approx(math.log(math.sqrt(2)))
    assert c.Y == pytest.approx(3 * math.pi / 4)
    assert c.point() == pytest.approx(z)


def test_segment_lies_on_one_spiral():
    lam, w = -0.5, 2 - 1j
    seg = spiral_segment(lam, w, 50)
    assert seg[-1] == w
    assert abs(seg[0]) == pytest.approx(1e-9 * abs(w), rel=1e-9)
    th = lambda_arg(lam, seg)
    d = np.abs(th - th[-1])
    assert np.all(np.minimum(d, TWO_PI - d) < 1e-9)
    # moduli are geometric
    ratios = np.abs(seg[1:]) / np.abs(seg[:-1])
    assert np.allclose(ratios, ratios[0])
    assert list(spiral_segment(lam, 0, 5)) == [0j]
