"""Quasiconformal reflection in the boundary of a spirallike domain.

The reflection fixes every lambda-spiral and inverts the modulus about the
boundary: ``h(P(r, theta)) = P(R(theta)^2 / r, theta)``.  In logarithmic
coordinates its complex dilatation depends only on ``rho'(theta)``, which
gives the closed form in :func:`beltrami_analytic`.  :func:`beltrami_fd`
recomputes the same quantity by finite differences as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .domain import RadiusFunction, SampledRadius, SpiralParams, _near, knot_grid
from .errors import ConstraintError, OriginError, RidgeError
from .spiral import TWO_PI, check_lambda, lambda_arg, spiral_exp

#: pass threshold added to sin(pi alpha / 2) by :func:`dilatation_sup`
SUP_TOL = 1e-12

#: default finite-difference spacing in log coordinates
FD_STEP = 1e-5

#: radial offset used to evaluate maps on the unit circle
BOUNDARY_OFFSET = 1e-6


class _Infinity:
    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


@dataclass(frozen=True)
class AnalyticMap:
    """A map on the unit disk given by an evaluator (and optionally its derivative).

    Evaluators should accept numpy arrays of complex points.
    """

    value: Callable
    derivative: Optional[Callable] = None

    def __call__(self, z):
        return self.value(z)


@dataclass
class BeltramiReport:
    theta: np.ndarray
    w: np.ndarray
    mu_abs: np.ndarray
    sup_mu: float
    bound: float
    passed: bool
    fd_max_dev: Optional[float] = None

    @property
    def points(self):
        return list(zip(self.w.tolist(), self.mu_abs.tolist()))

    def to_json(self, angle_scale: float = 1.0, include_points: bool = True) -> dict:
        out = {
            "sup_mu": float(self.sup_mu),
            "bound": float(self.bound),
            "pass": bool(self.passed),
        }
        if self.fd_max_dev is not None:
            out["fd_max_dev"] = float(self.fd_max_dev)
        if include_points:
            out["points"] = [
                {"theta": float(t) * angle_scale, "x": float(w.real), "y": float(w.imag), "mu_abs": float(m)}
                for t, w, m in zip(self.theta, self.w, self.mu_abs)
            ]
        return out


def reflect(R: RadiusFunction, lam: float, w):
    """Reflection ``h`` in the boundary of the domain with radius function ``R``.

    ``h(0) = INF`` and ``h(INF) = 0``.  Arrays are accepted when they hold no
    zeros.
    """
    lam = check_lambda(lam)
    if w is INF:
        return 0j
    arr = np.asarray(w, dtype=complex)
    if arr.ndim == 0 and arr == 0:
        return INF
    if np.any(arr == 0):
        raise OriginError("array input to reflect must not contain the origin")
    theta = lambda_arg(lam, arr)
    log_r = 2.0 * R.log_radius(theta) - np.log(np.abs(arr))
    out = spiral_exp(lam, log_r, theta)
    return complex(out) if np.ndim(out) == 0 else out


def beltrami_analytic(R: RadiusFunction, lam: float, theta):
    """Closed-form ``dW/dZ / dW/dZbar`` of the reflection at lambda-argument ``theta``.

    Equals ``-e^{-2i lam} (rho' + sc) / (rho' + sc + i cos^2 lam)`` with
    ``sc = sin(lam) cos(lam)``.  Raises :class:`RidgeError` where ``rho'`` is
    undefined.
    """
    lam = check_lambda(lam)
    s = np.asarray(R.slope(theta)) + math.sin(lam) * math.cos(lam)
    mu = -np.exp(-2j * lam) * s / (s + 1j * math.cos(lam) ** 2)
    return complex(mu) if np.ndim(mu) == 0 else mu


def log_jacobian_fd(R: RadiusFunction, lam: float, w, step: float = FD_STEP):
    """Central differences ``(dW/dX, dW/dY)`` of ``W = log h(e^Z)`` at ``Z = log w``.

    Accepts arrays; every point must keep clear of the ridge spirals.
    """
    lam = check_lambda(lam)
    w = np.asarray(w, dtype=complex)
    if np.any(w == 0):
        raise OriginError("finite differences need w != 0")
    if not step > 0:
        raise ConstraintError("step must be positive")
    theta = lambda_arg(lam, w)
    # a step of size `step` in X or Y moves theta by up to (1 + |tan lam|) * step
    exclusion = 10.0 * step * (1.0 + abs(math.tan(lam)))
    if np.any(_near(np.atleast_1d(theta), R.ridges(), exclusion)):
        raise RidgeError(f"a point lies within {exclusion:.3g} of a ridge spiral")
    Z = np.log(w)

    def h(Zp):
        return reflect(R, lam, np.exp(Zp))

    # log of a ratio of nearby points avoids branch jumps in W
    dX = np.log(h(Z + step) / h(Z - step)) / (2 * step)
    dY = np.log(h(Z + 1j * step) / h(Z - 1j * step)) / (2 * step)
    if w.ndim == 0:
        return complex(dX), complex(dY)
    return dX, dY


def beltrami_fd(R: RadiusFunction, lam: float, w, step: float = FD_STEP):
    """Finite-difference counterpart of :func:`beltrami_analytic`."""
    dX, dY = log_jacobian_fd(R, lam, w, step)
    return (dX - 1j * dY) / (dX + 1j * dY)


def dilatation_sup(R: RadiusFunction, p: SpiralParams, grid: int = 720) -> BeltramiReport:
    """Sup of ``|mu|`` over off-ridge angles, compared with ``sin(pi alpha / 2)``.

    Samples the midpoints of ``grid`` uniform cells, plus every knot interval
    of a sampled profile, dropping any sample that falls on a ridge.
    """
    if grid < 8:
        raise ConstraintError("grid must be >= 8")
    theta = (np.arange(grid) + 0.5) * (TWO_PI / grid)
    if isinstance(R, SampledRadius):
        theta = np.concatenate([theta, knot_grid(R.n) + 0.5 * R.spacing])
    theta = theta[~_near(theta, R.ridges(), 1e-9)]
    mu_abs = np.abs(beltrami_analytic(R, p.lam, theta))
    w = spiral_exp(p.lam, R.log_radius(theta), theta)
    sup = float(np.max(mu_abs))
    return BeltramiReport(theta, w, mu_abs, sup, p.k, sup <= p.k + SUP_TOL)


def extend(f, R: RadiusFunction, lam: float, z, boundary_offset: float = BOUNDARY_OFFSET):
    """Quasiconformal extension of ``f`` to the sphere.

    ``f`` inside the disk, ``f((1 - boundary_offset) z)`` on the circle and
    ``h(f(1 / conj z))`` outside; ``INF`` maps to ``INF``.
    """
    if z is INF:
        return INF
    z = np.asarray(z, dtype=complex)
    mod = np.abs(z)
    out = np.empty(z.shape, dtype=complex)
    inside = mod < 1
    on = mod == 1
    outside = mod > 1
    if np.any(inside):
        out[inside] = f(z[inside])
    if np.any(on):
        out[on] = f((1 - boundary_offset) * z[on])
    if np.any(outside):
        out[outside] = reflect(R, lam, np.asarray(f(1 / np.conj(z[outside]))))
    return complex(out) if out.ndim == 0 else out
