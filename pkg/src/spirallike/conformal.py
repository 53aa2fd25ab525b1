"""The half-plane power ``Q``, the function ``k`` and the normalized map ``g`` onto ``U``.

``Q(z) = ((1 + z e^{2i lam/alpha}) / (1 - z))**alpha`` maps the disk onto the
sector ``|arg w - lam| < pi alpha / 2``.  ``k`` solves ``z k'/k = Q`` with
``k(0) = 0``, ``k'(0) = 1``:

    k(z) = z exp( int_0^1 (Q(s z) - 1) / s ds )

and ``g = k / k(1^-)`` maps the disk onto ``U`` with ``g(0) = 0``, ``g(1) = 1``.
The integral to ``z = 1`` has an ``(1 - s)**(-alpha)`` endpoint singularity,
absorbed by a Gauss-Jacobi panel.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .domain import SpiralParams, StandardU, constants, tip
from .errors import ConstraintError, DegenerateMapError, SingularityError
from .quadrature import (
    DEFAULT_CONFIG,
    Endpoint,
    QuadratureConfig,
    QuadratureError,
    graded_edges,
    integrate,
    levels_for_distance,
    panel_rule,
)
from .reflection import AnalyticMap
from .spiral import TWO_PI, check_lambda, lambda_arg

#: points closer than this to 1 or to the zero of Q count as singular
SINGULAR_EPS = 1e-14

#: default radial offset for boundary traces of g
TRACE_OFFSET = 1e-4


def _rot(p: SpiralParams) -> complex:
    return cmath.exp(2j * p.lam / p.alpha)


def q_zero(p: SpiralParams) -> complex:
    """Boundary zero ``-e^{-2i lam/alpha}`` of Q (prevertex of the tip ``w*``)."""
    return -cmath.exp(-2j * p.lam / p.alpha)


def tip_prevertex(p: SpiralParams) -> float:
    """``t1 = pi - 2 lam / alpha``, so that ``e^{i t1}`` is the zero of Q."""
    return math.pi - 2.0 * p.lam / p.alpha


def _log_base(p, z):
    # Log(1 + cz) - Log(1 - z) is the principal log of the base on the closed
    # disk: the base stays in a half-plane whose boundary passes through 0.
    return np.log(1 + _rot(p) * z) - np.log(1 - z)


def _check_domain(p, z):
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1 + 1e-12):
        raise ConstraintError("Q and k are only defined on the closed unit disk")
    if np.any(np.abs(z - 1) < SINGULAR_EPS):
        raise SingularityError("Q has a pole at z = 1")
    if np.any(np.abs(z - q_zero(p)) < SINGULAR_EPS):
        raise SingularityError("Q has a branch zero at z = -exp(-2i lam/alpha)")
    return z


def q_function(p: SpiralParams, z):
    """Principal-branch ``Q(z)``; ``Q(0) = 1``."""
    z = _check_domain(p, z)
    out = np.exp(p.alpha * _log_base(p, z))
    return complex(out) if out.ndim == 0 else out


def _q_minus_one(p, z):
    return np.expm1(p.alpha * _log_base(p, z))


@lru_cache(maxsize=256)
def _log_k_at_one(lam: float, alpha: float, cfg: QuadratureConfig) -> complex:
    p = SpiralParams(lam, alpha)
    c = _rot(p)
    near_one = Endpoint(
        exponent=-alpha,
        factor=lambda d: (1 + c * (1 - d)) ** alpha / (1 - d),
        regular=lambda d: -1.0 / (1 - d),
    )
    return complex(integrate(lambda s: _q_minus_one(p, s) / s, 0.0, 1.0, right=near_one, cfg=cfg))


def log_k_at_one(p: SpiralParams, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """``log k(1^-) = int_0^1 (Q(s) - 1) / s ds``, cached per (lam, alpha, cfg)."""
    return _log_k_at_one(p.lam, p.alpha, cfg)


def _distance_to_singularity(p, z):
    # in the s-plane the singular points of Q(s z) are 1/z and q_zero/z
    return np.minimum(np.abs(1 - z), np.abs(z - q_zero(p))) / np.abs(z)


def log_k_ratio(p: SpiralParams, z, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """``int_0^1 (Q(s z) - 1) / s ds`` for nonzero ``z`` in the closed disk minus singular points.

    The mesh on [0, 1] is graded toward ``s = 1`` until the innermost panel is
    small compared with the distance to the nearest singularity, then refined
    once more to confirm ``cfg.rel_tol``.
    """
    z = _check_domain(p, z)
    flat = z.ravel()
    out = np.empty(flat.shape, dtype=complex)
    levels = np.array([levels_for_distance(d, cfg) for d in _distance_to_singularity(p, flat)])
    pending = np.arange(flat.size)

    def estimate(idx, lev):
        x, w = panel_rule(graded_edges(0.0, 1.0, lev, cfg.ratio, "right"), cfg.order)
        vals = _q_minus_one(p, np.outer(flat[idx], x)) / x
        return vals @ w

    while pending.size:
        lev = int(levels[pending].min())
        if lev + 2 > cfg.max_panels:
            raise QuadratureError("radial quadrature for k did not converge")
        batch = pending[levels[pending] == lev]
        coarse = estimate(batch, lev)
        fine = estimate(batch, lev + 1)
        ok = np.abs(fine - coarse) <= cfg.rel_tol * np.maximum(np.abs(fine), 1.0)
        out[batch[ok]] = fine[ok]
        levels[batch[~ok]] += 2
        pending = np.setdiff1d(pending, batch[ok])
    return out.reshape(z.shape)


def map_k(p: SpiralParams, z, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """``k(z) = z exp(int_0^z (Q - 1)/zeta dzeta)``; ``k(1)`` means ``k(1^-)``."""
    z = np.asarray(z, dtype=complex)
    out = np.zeros(z.shape, dtype=complex)
    one = np.abs(z - 1) < SINGULAR_EPS
    nz = (z != 0) & ~one
    if np.any(one):
        out[one] = cmath.exp(log_k_at_one(p, cfg))
    if np.any(nz):
        out[nz] = z[nz] * np.exp(log_k_ratio(p, z[nz], cfg))
    return complex(out) if out.ndim == 0 else out


def map_g(p: SpiralParams, z, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """Conformal map of the disk onto ``U`` with ``g(0) = 0`` and ``g(1) = 1``."""
    z = np.asarray(z, dtype=complex)
    out = np.zeros(z.shape, dtype=complex)
    one = np.abs(z - 1) < SINGULAR_EPS
    nz = (z != 0) & ~one
    out[one] = 1.0
    if np.any(nz):
        out[nz] = z[nz] * np.exp(log_k_ratio(p, z[nz], cfg) - log_k_at_one(p, cfg))
    return complex(out) if out.ndim == 0 else out


def g_map(p: SpiralParams, cfg: QuadratureConfig = DEFAULT_CONFIG, with_derivative: bool = True) -> AnalyticMap:
    """``g`` wrapped as an :class:`AnalyticMap`; ``g' = g Q / z`` when requested."""

    def value(z):
        return map_g(p, z, cfg)

    def derivative(z):
        z = np.asarray(z, dtype=complex)
        d = np.full(z.shape, cmath.exp(-log_k_at_one(p, cfg)), dtype=complex)
        nz = z != 0
        d[nz] = map_g(p, z[nz], cfg) * q_function(p, z[nz]) / z[nz]
        return complex(d) if d.ndim == 0 else d

    return AnalyticMap(value, derivative if with_derivative else None)


def spirallike_order_sample(
    f: AnalyticMap, lam: float, grid: int = 64, r_max: float = 0.999, step: float = 1e-6
) -> float:
    """Sup of ``|arg(z f'(z)/f(z)) - lam|`` over a polar grid.

    Radii ``r_max * i / grid`` (``i = 1..grid``) times ``grid`` equally spaced
    angles, plus the origin where ``z f'/f = 1``.  Without a derivative
    evaluator ``f'`` comes from central differences with spacing ``step``.
    A value below ``pi alpha / 2`` is evidence of order ``alpha``.
    """
    lam = check_lambda(lam)
    if grid < 2 or not (0 < r_max < 1):
        raise ConstraintError("need grid >= 2 and 0 < r_max < 1")
    r = r_max * np.arange(1, grid + 1) / grid
    t = TWO_PI * np.arange(grid) / grid
    z = (r[:, None] * np.exp(1j * t)[None, :]).ravel()
    fz = np.asarray(f(z), dtype=complex)
    if np.any(fz == 0):
        raise DegenerateMapError("map vanishes at a nonzero sample point")
    if f.derivative is not None:
        dfz = np.asarray(f.derivative(z), dtype=complex)
    else:
        dfz = (np.asarray(f(z + step)) - np.asarray(f(z - step))) / (2 * step)
    q = z * dfz / fz
    dev = np.abs(np.angle(q * cmath.exp(-1j * lam)))
    return float(max(dev.max(), abs(lam)))


class IdentityCheck(NamedTuple):
    lhs: float
    rhs: float
    rel_err: float


def identity_rhs(alpha: float, beta: float) -> float:
    return math.pi * math.sin((math.pi / 2 - beta) * alpha) / math.sin(math.pi * alpha)


def integral_identity(alpha: float, beta: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> IdentityCheck:
    """Both sides of

        int_0^{pi/2 - beta} cos^a(x + beta) / sin^a(x) dx = pi sin((pi/2 - beta) a) / sin(pi a).

    The left side has an ``x**(-a)`` singularity at 0 and an ``(b - x)**a``
    cusp at ``b = pi/2 - beta``; both ends get Gauss-Jacobi panels.
    """
    alpha, beta = float(alpha), float(beta)
    if not (0 < alpha < 1):
        raise ConstraintError("alpha must lie in (0, 1)")
    if not (abs(beta) < math.pi / 2):
        raise ConstraintError("beta must lie in (-pi/2, pi/2)")
    b = math.pi / 2 - beta

    def f(x):
        return np.cos(x + beta) ** alpha / np.sin(x) ** alpha

    def sinc_pow(d):
        return (np.sin(d) / d) ** alpha

    # near 0: x**-a * (x / sin x)**a cos**a(x + beta)
    left = Endpoint(-alpha, lambda d: np.cos(d + beta) ** alpha / sinc_pow(d))
    # near b: cos(x + beta) = sin(b - x), so d**a * (sin d / d)**a / sin**a(b - d)
    right = Endpoint(alpha, lambda d: sinc_pow(d) / np.sin(b - d) ** alpha)
    lhs = float(integrate(f, 0.0, b, left=left, right=right, cfg=cfg))
    rhs = identity_rhs(alpha, beta)
    return IdentityCheck(lhs, rhs, abs(lhs - rhs) / abs(rhs))


@dataclass
class BoundaryTrace:
    """Values of ``g((1 - eps) e^{it})`` on ``t_j = 2 pi j / (n + 1)``, ``j = 1..n``."""

    t: np.ndarray
    values: np.ndarray
    lambda_args: np.ndarray
    moduli: np.ndarray
    t1: float
    theta0: float
    theta1: float
    eps: float


def trace_grid(n: int) -> np.ndarray:
    return TWO_PI * np.arange(1, n + 1) / (n + 1)


def boundary_trace(
    p: SpiralParams, n: int = 256, eps: float = TRACE_OFFSET, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> BoundaryTrace:
    """Trace of ``g`` just inside the unit circle.

    ``theta0`` is the lambda-argument of ``g(1) = 1`` and ``theta1`` that of
    the image of the zero of Q; their difference should be ``theta*``.
    """
    t = trace_grid(n)
    vals = map_g(p, (1 - eps) * np.exp(1j * t), cfg)
    t1 = tip_prevertex(p)
    w1 = map_g(p, (1 - eps) * cmath.exp(1j * t1), cfg)
    return BoundaryTrace(
        t=t,
        values=vals,
        lambda_args=lambda_arg(p.lam, vals),
        moduli=np.abs(vals),
        t1=t1,
        theta0=float(lambda_arg(p.lam, map_g(p, 1.0, cfg))),
        theta1=float(lambda_arg(p.lam, w1)),
        eps=eps,
    )


def radius_defect(trace: BoundaryTrace, p: SpiralParams) -> np.ndarray:
    """``|log|g| - log R_U(arg_lam g)|`` along a boundary trace."""
    return np.abs(np.log(trace.moduli) - StandardU(p).log_radius(trace.lambda_args))


__all__ = [
    "BoundaryTrace",
    "IdentityCheck",
    "boundary_trace",
    "constants",
    "g_map",
    "identity_rhs",
    "integral_identity",
    "log_k_at_one",
    "log_k_ratio",
    "map_g",
    "map_k",
    "q_function",
    "q_zero",
    "radius_defect",
    "spirallike_order_sample",
    "tip",
    "tip_prevertex",
]
