"""Random radius profiles for stress-testing the checkers.

Admissible profiles are convex mixtures of rotated standard-U profiles and a
small trigonometric series; every piece of the mixture has slopes in
``[B, A]``, so the mixture does too.  Violating profiles add a triangular
bump whose slope leaves ``[B, A]`` by a chosen margin.
"""

from __future__ import annotations

import math

import numpy as np

from .domain import DEFAULT_KNOTS, SampledRadius, SpiralParams, StandardU, constants, knot_grid
from .spiral import TWO_PI


def random_params(rng: np.random.Generator, alpha_range=(0.2, 0.8), lam_fill=0.9) -> SpiralParams:
    alpha = rng.uniform(*alpha_range)
    lam = rng.uniform(-1, 1) * lam_fill * math.pi * alpha / 2
    return SpiralParams(lam, alpha)


def random_admissible(p: SpiralParams, rng: np.random.Generator, n: int = DEFAULT_KNOTS) -> SampledRadius:
    """Sampled profile whose log-radius slopes stay inside ``[B, A]``."""
    A, B, _ = constants(p)
    th = knot_grid(n)
    u = StandardU(p)
    weights = rng.dirichlet(np.ones(3))
    rho = weights[0] * u.log_radius(th - rng.uniform(0, TWO_PI))
    rho += weights[1] * u.log_radius(th - rng.uniform(0, TWO_PI))
    ks = np.arange(1, 6)
    amp = rng.normal(size=5) / ks**2
    phase = rng.uniform(0, TWO_PI, size=5)
    # |d/dtheta| of the series is at most sum k|a_k|
    amp *= 0.95 * min(A, -B) / np.sum(ks * np.abs(amp))
    rho += weights[2] * np.sum(amp[:, None] * np.sin(ks[:, None] * th + phase[:, None]), axis=0)
    return SampledRadius(rho + rng.normal())


def violating(
    p: SpiralParams,
    rng: np.random.Generator,
    n: int = DEFAULT_KNOTS,
    excess: float = 0.1,
    max_half_width: float = 2.5,
) -> SampledRadius:
    """Admissible profile plus a knot-aligned triangular bump.

    The rising side has slope at least ``A + excess`` and the falling side at
    most ``B - excess``.  The half-width is chosen so the log-radius violation
    (``excess * half_width``) is at least twice the sampled tolerance
    ``(2 pi / n)(A - B)``.
    """
    A, B, _ = constants(p)
    base = random_admissible(p, rng, n)
    h = TWO_PI / n
    tol = h * (A - B)
    want = max(8 * h, 2.0 * tol / excess)
    if want > max_half_width:
        excess = 2.0 * tol / max_half_width
        want = max_half_width
    m = int(math.ceil(want / h))
    bump_slope = (A - B) + excess
    tent = bump_slope * h * (m - np.abs(np.arange(-m, m + 1)))
    start = int(rng.integers(n))
    values = np.array(base.values)
    values[(start + np.arange(-m, m + 1)) % n] += tent
    return SampledRadius(values, base.shift)
