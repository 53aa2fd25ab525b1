"""Coordinates adapted to logarithmic spirals.

A nonzero point ``w`` sits on exactly one lambda-spiral ``e^{i theta} *
{exp(e^{i lam} t)}``; ``theta`` is its lambda-argument and ``|w|`` its
modulus.  ``P_lam(r, theta) = r * exp(i (theta + tan(lam) log r))`` is the
inverse of that labelling.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import ConstraintError, OriginError

TWO_PI = 2.0 * math.pi

#: moduli below this are treated as the origin by :func:`decompose`
ZERO_GUARD = 1e-300

#: default modulus floor (relative to ``|w|``) where a spiral segment is cut
SEGMENT_FLOOR = 1e-9


class SpiralCoord(NamedTuple):
    """Modulus and (unreduced) lambda-argument of a point."""

    r: float
    theta: float


class LogCoord(NamedTuple):
    """``Z = X + iY = log z`` with ``Y`` on the principal branch."""

    X: float
    Y: float

    @property
    def Z(self) -> complex:
        return complex(self.X, self.Y)

    def point(self) -> complex:
        return complex(np.exp(self.Z))


def check_lambda(lam: float) -> float:
    lam = float(lam)
    if not (abs(lam) < math.pi / 2):
        raise ConstraintError(f"need |lambda| < pi/2, got {lam!r}")
    return lam


def spiral_point(lam, r, theta):
    """Evaluate ``P_lam(r, theta)``; ``P_lam(0, theta) = 0``.

    Works elementwise on arrays.
    """
    t = math.tan(check_lambda(lam))
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if np.any(r < 0):
        raise ConstraintError("modulus must be non-negative")
    with np.errstate(divide="ignore"):
        log_r = np.log(r)
    out = np.where(r > 0, r * np.exp(1j * (theta + t * np.where(r > 0, log_r, 0.0))), 0j)
    return out[()] if out.ndim == 0 else out


def spiral_exp(lam, log_r, theta):
    """``P_lam(exp(log_r), theta)`` without forming ``r``; safe for huge |log_r|."""
    t = math.tan(lam)
    return np.exp((1.0 + 1j * t) * np.asarray(log_r) + 1j * np.asarray(theta))


def lambda_arg(lam, w):
    """lambda-argument of ``w`` reduced to ``[0, 2 pi)``."""
    t = math.tan(check_lambda(lam))
    w = np.asarray(w, dtype=complex)
    mod = np.abs(w)
    if np.any(mod < ZERO_GUARD):
        raise OriginError("lambda-argument is undefined at the origin")
    theta = np.mod(np.angle(w) - t * np.log(mod), TWO_PI)
    # np.mod can return exactly 2*pi for tiny negative inputs
    theta = np.where(theta >= TWO_PI, 0.0, theta)
    return theta[()] if theta.ndim == 0 else theta


def decompose(lam: float, w: complex) -> SpiralCoord:
    """Inverse of :func:`spiral_point` with ``theta`` in ``[0, 2 pi)``."""
    w = complex(w)
    if abs(w) < ZERO_GUARD:
        raise OriginError("cannot decompose the origin")
    return SpiralCoord(abs(w), float(lambda_arg(lam, w)))


def to_log(z: complex) -> LogCoord:
    z = complex(z)
    if z == 0:
        raise OriginError("log coordinates are undefined at the origin")
    return LogCoord(math.log(abs(z)), math.atan2(z.imag, z.real))


def spiral_segment(lam: float, w: complex, n: int, floor: float = SEGMENT_FLOOR) -> np.ndarray:
    """Polyline through the spiral segment ``[0, w]_lam``.

    Samples ``w * exp(e^{i lam} t)`` for ``t`` uniform in ``[-T, 0]``, where
    ``T`` brings the modulus down to ``floor * |w|``.  Uniform ``t`` means
    the moduli are geometrically graded toward the origin.  The last sample
    is ``w`` itself.
    """
    lam = check_lambda(lam)
    w = complex(w)
    if w == 0:
        return np.array([0j])
    if n < 2:
        raise ConstraintError("a spiral segment needs n >= 2 samples")
    if not (0 < floor < 1):
        raise ConstraintError("segment floor must lie in (0, 1)")
    T = -math.log(floor) / math.cos(lam)
    t = np.linspace(-T, 0.0, n)
    pts = w * np.exp(np.exp(1j * lam) * t)
    pts[-1] = w
    return pts
