"""Composite Gauss rules on geometrically graded meshes.

Panels shrink by a fixed ratio toward an endpoint where the integrand is
singular (or nearly so).  When the local behaviour ``d**e * phi(d)`` is known,
with ``d`` the distance to the endpoint and ``phi`` smooth, the innermost panel
uses a Gauss-Jacobi rule for the weight ``d**e``.  Otherwise the grading alone
resolves the endpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_jacobi

from .errors import ConstraintError, QuadratureError


@dataclass(frozen=True)
class QuadratureConfig:
    """Accuracy and mesh controls.

    ``grading`` is the exponent of the panel ratio: consecutive panels toward
    a graded end shrink by ``2**-grading`` (0.5 by default).
    """

    rel_tol: float = 1e-12
    max_panels: int = 160
    grading: float = 1.0
    order: int = 12
    min_levels: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ConstraintError("rel_tol must be positive")
        if self.grading < 1:
            raise ConstraintError("grading exponent must be >= 1")
        if self.order < 2 or self.max_panels < 2:
            raise ConstraintError("need order >= 2 and max_panels >= 2")

    @property
    def ratio(self) -> float:
        return 2.0 ** (-self.grading)


DEFAULT_CONFIG = QuadratureConfig()


@lru_cache(maxsize=None)
def gauss_legendre(n: int):
    x, w = leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=None)
def gauss_jacobi(n: int, exponent: float, side: str):
    """Nodes/weights on [-1, 1] for weight ``(1-u)**e`` (side 'right') or ``(1+u)**e``."""
    if side == "right":
        x, w = roots_jacobi(n, exponent, 0.0)
    else:
        x, w = roots_jacobi(n, 0.0, exponent)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def panel_rule(edges, order: int):
    """Composite Gauss-Legendre nodes and weights over consecutive ``edges``."""
    u, v = gauss_legendre(order)
    edges = np.asarray(edges, dtype=float)
    lo, hi = edges[:-1, None], edges[1:, None]
    half = 0.5 * (hi - lo)
    return (lo + half * (u + 1)).ravel(), (half * v).ravel()


def graded_edges(a: float, b: float, levels: int, ratio: float, toward: str) -> np.ndarray:
    """Edges of ``levels + 1`` panels on [a, b], widths shrinking geometrically toward one end."""
    L = b - a
    k = np.arange(levels + 1)
    if toward == "right":
        inner = b - L * ratio**k
        return np.append(inner, b)
    inner = a + L * ratio**k
    return np.append(inner, a)[::-1]


@dataclass(frozen=True)
class Endpoint:
    """Local model ``f = d**exponent * factor(d) + regular(d)`` near an endpoint.

    With ``factor=None`` the endpoint is only graded toward (no Jacobi panel).
    """

    exponent: float = 0.0
    factor: Optional[Callable] = None
    regular: Optional[Callable] = None


def _inner_panel(end: Endpoint, width: float, order: int, side: str):
    """Integral over the panel of width ``width`` touching the endpoint."""
    u, v = gauss_jacobi(order, end.exponent, side)
    d = 0.5 * width * ((1 - u) if side == "right" else (1 + u))
    total = (0.5 * width) ** (1 + end.exponent) * np.sum(v * end.factor(d))
    if end.regular is not None:
        ul, vl = gauss_legendre(order)
        dl = 0.5 * width * (ul + 1)
        total = total + 0.5 * width * np.sum(vl * end.regular(dl))
    return total


def _estimate(f, a, b, left, right, levels, cfg):
    order, ratio = cfg.order, cfg.ratio
    if left is not None and right is not None:
        m = 0.5 * (a + b)
        return _estimate(f, a, m, left, None, levels, cfg) + _estimate(f, m, b, None, right, levels, cfg)
    if left is None and right is None:
        x, w = panel_rule([a, b], order)
        return np.sum(w * f(x))
    side, end = ("right", right) if right is not None else ("left", left)
    edges = graded_edges(a, b, levels, ratio, side)
    if end.factor is None:
        x, w = panel_rule(edges, order)
        return np.sum(w * f(x))
    if side == "right":
        x, w = panel_rule(edges[:-1], order)
        width = edges[-1] - edges[-2]
    else:
        x, w = panel_rule(edges[1:], order)
        width = edges[1] - edges[0]
    return np.sum(w * f(x)) + _inner_panel(end, width, order, side)


def integrate(
    f: Callable,
    a: float,
    b: float,
    *,
    left: Endpoint | None = None,
    right: Endpoint | None = None,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
):
    """Integrate ``f`` over [a, b], grading toward the endpoints given.

    The number of graded levels grows until two successive estimates agree to
    ``cfg.rel_tol``; :class:`QuadratureError` is raised when ``cfg.max_panels``
    is reached first.
    """
    if not b > a:
        raise ConstraintError("need b > a")
    if left is None and right is None:
        return _estimate(f, a, b, None, None, 0, cfg)
    sides = (left is not None) + (right is not None)
    levels = cfg.min_levels
    prev = _estimate(f, a, b, left, right, levels, cfg)
    while True:
        levels += 1
        if sides * (levels + 1) > cfg.max_panels:
            raise QuadratureError("graded quadrature did not converge", estimate=prev)
        cur = _estimate(f, a, b, left, right, levels, cfg)
        err = abs(cur - prev)
        if err <= cfg.rel_tol * abs(cur) or err == 0.0:
            return cur
        prev = cur


def levels_for_distance(dist: float, cfg: QuadratureConfig, length: float = 1.0) -> int:
    """Levels needed so the innermost panel is at most a quarter of ``dist`` wide."""
    if dist <= 0:
        raise ConstraintError("distance to the singularity must be positive")
    need = math.log(4.0 * length / dist) / math.log(1.0 / cfg.ratio)
    return max(cfg.min_levels, int(math.ceil(need)))
