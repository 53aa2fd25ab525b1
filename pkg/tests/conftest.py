import math

import numpy as np
import pytest

from spirallike import SpiralParams

PARAM_GRID = [
    (lam, a)
    for lam in (-0.6, -0.3, 0.0, 0.3, 0.6)
    for a in (0.25, 0.5, 0.8)
    if abs(lam) < math.pi * a / 2
]


@pytest.fixture(params=PARAM_GRID, ids=lambda t: f"lam{t[0]}_a{t[1]}")
def params(request):
    return SpiralParams(*request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
