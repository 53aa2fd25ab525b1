"""Spirallike domains described by their radius functions.

A lambda-spirallike domain containing the origin is
``{P_lam(r, theta) : 0 <= r < R(theta)}`` for a 2*pi-periodic radius
function ``R``.  Everything here works with ``rho = log R``.

Four variants are provided: the standard domain ``U`` (``rho`` has slopes
``B`` then ``A``), its dual ``V``, a disk-like constant, and a sampled
profile that is piecewise linear in ``rho`` between uniform knots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import ConstraintError, OriginError, RidgeError
from .spiral import TWO_PI, check_lambda, decompose, lambda_arg, spiral_exp

#: default number of knots for sampled radius functions (0.5 degree spacing)
DEFAULT_KNOTS = 720

#: angular distance below which a point counts as sitting on a ridge
RIDGE_EPS = 1e-12

#: inclusion tolerance used for the analytic variants
ANALYTIC_TOL = 1e-9


@dataclass(frozen=True)
class SpiralParams:
    """The pair (lambda, alpha) with |lambda| < pi*alpha/2 < pi/2."""

    lam: float
    alpha: float

    def __post_init__(self):
        lam, alpha = float(self.lam), float(self.alpha)
        if not (0.0 < alpha < 1.0):
            raise ConstraintError(f"alpha must lie in (0, 1), got {alpha!r}")
        if not (abs(lam) < math.pi * alpha / 2):
            raise ConstraintError(
                f"need |lambda| < pi*alpha/2 = {math.pi * alpha / 2:.6g}, got lambda={lam!r}"
            )
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "alpha", alpha)

    @property
    def cos2(self) -> float:
        return math.cos(self.lam) ** 2

    @property
    def sincos(self) -> float:
        return math.sin(self.lam) * math.cos(self.lam)

    @property
    def slope_bound(self) -> float:
        """``cos^2(lam) tan(pi alpha / 2)``, the bound on ``|rho' + sin cos|``."""
        return self.cos2 * math.tan(math.pi * self.alpha / 2)

    @property
    def k(self) -> float:
        """Dilatation bound ``sin(pi alpha / 2)``."""
        return math.sin(math.pi * self.alpha / 2)


class DomainConstants(NamedTuple):
    A: float
    B: float
    theta_star: float


def constants(p: SpiralParams) -> DomainConstants:
    """Slopes ``A > 0 > B`` of the standard profile and the crossover angle."""
    c2 = p.cos2
    ta = math.tan(math.pi * p.alpha / 2)
    tl = math.tan(p.lam)
    A = c2 * (ta - tl)
    B = -c2 * (ta + tl)
    return DomainConstants(A, B, TWO_PI * A / (A - B))


def _reduce(theta):
    th = np.mod(np.asarray(theta, dtype=float), TWO_PI)
    return np.where(th >= TWO_PI, 0.0, th)


def _out(x):
    x = np.asarray(x)
    return x[()] if x.ndim == 0 else x


def _near(theta, ridges, eps):
    if len(ridges) == 0:
        return np.zeros(np.shape(theta), dtype=bool)
    d = np.abs(np.asarray(theta)[..., None] - np.asarray(ridges))
    d = np.minimum(d, TWO_PI - d)
    return np.any(d < eps, axis=-1)


class RadiusFunction:
    """Periodic radius function; subclasses define ``log_radius`` and slopes."""

    kind = "abstract"
    #: True for closed-form variants whose slopes are exact
    analytic = True

    def log_radius(self, theta):
        raise NotImplementedError

    def radius(self, theta):
        return _out(np.exp(self.log_radius(theta)))

    __call__ = radius

    def ridges(self) -> np.ndarray:
        """Angles in ``[0, 2 pi)`` where ``rho`` has a kink."""
        raise NotImplementedError

    def slopes(self) -> np.ndarray:
        """Every value taken by ``rho'`` (one per smooth piece)."""
        raise NotImplementedError

    def _slope(self, th):
        raise NotImplementedError

    def slope(self, theta, eps: float = RIDGE_EPS):
        """``rho'(theta)``; raises :class:`RidgeError` on a kink."""
        th = _reduce(theta)
        if np.any(_near(th, self.ridges(), eps)):
            raise RidgeError(f"log-radius derivative undefined at theta={theta!r}")
        return _out(self._slope(th))

    def scaled(self, factor: float) -> "RadiusFunction":
        raise NotImplementedError

    def dual(self) -> "RadiusFunction":
        raise NotImplementedError

    def tolerance(self, p: SpiralParams) -> float:
        return ANALYTIC_TOL


@dataclass(frozen=True)
class StandardU(RadiusFunction):
    """``R(theta) = max(e^{B theta}, e^{-A(2 pi - theta)})`` on ``[0, 2 pi)``."""

    params: SpiralParams
    shift: float = 0.0
    kind = "standard-U"

    def log_radius(self, theta):
        A, B, _ = constants(self.params)
        th = _reduce(theta)
        return _out(np.maximum(B * th, -A * (TWO_PI - th)) + self.shift)

    def ridges(self):
        return np.array([0.0, constants(self.params).theta_star])

    def slopes(self):
        A, B, _ = constants(self.params)
        return np.array([B, A])

    def _slope(self, th):
        A, B, ts = constants(self.params)
        return np.where(th < ts, B, A)

    def scaled(self, factor):
        return StandardU(self.params, self.shift + math.log(factor))

    def dual(self):
        return StandardV(self.params, -self.shift)


@dataclass(frozen=True)
class StandardV(RadiusFunction):
    """Dual of :class:`StandardU`: ``R(theta) = min(e^{A theta}, e^{B(theta - 2 pi)})``."""

    params: SpiralParams
    shift: float = 0.0
    kind = "standard-V"

    def log_radius(self, theta):
        A, B, _ = constants(self.params)
        th = _reduce(theta)
        return _out(np.minimum(A * th, B * (th - TWO_PI)) + self.shift)

    def ridges(self):
        return np.array([0.0, TWO_PI - constants(self.params).theta_star])

    def slopes(self):
        A, B, _ = constants(self.params)
        return np.array([A, B])

    def _slope(self, th):
        A, B, ts = constants(self.params)
        return np.where(th < TWO_PI - ts, A, B)

    def scaled(self, factor):
        return StandardV(self.params, self.shift + math.log(factor))

    def dual(self):
        return StandardU(self.params, -self.shift)


@dataclass(frozen=True)
class ConstantRadius(RadiusFunction):
    """``R = c``; with ``lam = 0`` this is the disk of radius ``c``."""

    c: float = 1.0
    kind = "constant"

    def __post_init__(self):
        if not (0 < self.c < math.inf):
            raise ConstraintError("constant radius must be finite and positive")

    def log_radius(self, theta):
        return _out(np.full(np.shape(theta), math.log(self.c)))

    def ridges(self):
        return np.empty(0)

    def slopes(self):
        return np.zeros(1)

    def _slope(self, th):
        return np.zeros(np.shape(th))

    def scaled(self, factor):
        return ConstantRadius(self.c * factor)

    def dual(self):
        return ConstantRadius(1.0 / self.c)


@dataclass(frozen=True, eq=False)
class SampledRadius(RadiusFunction):
    """Piecewise-linear ``rho`` on the knots ``theta_j = 2 pi j / N``.

    ``values[j]`` is ``rho(theta_j) - shift``.  Keeping the additive log
    scale separate makes scaling leave the slopes bit-for-bit unchanged.
    """

    values: np.ndarray
    shift: float = 0.0
    analytic = False
    kind = "sampled"
    _closed: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 1 or len(v) < 8:
            raise ConstraintError("a sampled radius function needs at least 8 knots")
        if not np.all(np.isfinite(v)) or not math.isfinite(self.shift):
            raise ConstraintError("radius values must be finite and positive")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "_closed", np.append(v, v[0]))

    @classmethod
    def from_log_function(cls, fn, n: int = DEFAULT_KNOTS) -> "SampledRadius":
        return cls(np.asarray(fn(knot_grid(n)), dtype=float))

    @classmethod
    def from_samples(cls, theta, R, n: int = DEFAULT_KNOTS) -> "SampledRadius":
        """Resample scattered ``(theta, R)`` pairs onto ``n`` uniform knots.

        ``theta`` must be strictly increasing inside ``[0, 2 pi)`` and ``R``
        finite and positive.  Interpolation is periodic and linear in
        ``log R``.
        """
        theta = np.asarray(theta, dtype=float)
        R = np.asarray(R, dtype=float)
        if theta.ndim != 1 or theta.shape != R.shape or len(theta) < 2:
            raise ConstraintError("theta and R must be matching 1-D arrays of length >= 2")
        if np.any(theta < 0) or np.any(theta >= TWO_PI) or np.any(np.diff(theta) <= 0):
            raise ConstraintError("theta must be strictly increasing in [0, 2*pi)")
        if not np.all(np.isfinite(R)) or np.any(R <= 0):
            raise ConstraintError("R must be finite and positive")
        return cls(np.interp(knot_grid(n), theta, np.log(R), period=TWO_PI))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def spacing(self) -> float:
        return TWO_PI / self.n

    @property
    def knots(self) -> np.ndarray:
        return knot_grid(self.n)

    def log_radius(self, theta):
        th = _reduce(theta)
        xp = np.arange(self.n + 1) * self.spacing
        return _out(np.interp(th, xp, self._closed) + self.shift)

    def ridges(self):
        return self.knots

    def slopes(self):
        return np.diff(self._closed) / self.spacing

    def _slope(self, th):
        idx = np.minimum((th / self.spacing).astype(int), self.n - 1)
        return self.slopes()[idx]

    def scaled(self, factor):
        return SampledRadius(self.values, self.shift + math.log(factor))

    def dual(self):
        # rho_dual(theta_j) = -rho(-theta_j) = -rho(theta_{N-j})
        idx = (-np.arange(self.n)) % self.n
        return SampledRadius(-self.values[idx], -self.shift)

    def tolerance(self, p: SpiralParams) -> float:
        A, B, _ = constants(p)
        return self.spacing * (A - B)


def knot_grid(n: int) -> np.ndarray:
    return np.arange(n) * (TWO_PI / n)


def standard_radius(p: SpiralParams, theta):
    """Radius function of ``U_{lam, alpha}``."""
    return StandardU(p).radius(theta)


def tip(p: SpiralParams) -> complex:
    """The tip ``w* = P_lam(e^{B theta*}, theta*)`` of ``U`` other than 1."""
    _, B, ts = constants(p)
    return complex(np.exp((1j + B * (1 + 1j * math.tan(p.lam))) * ts))


def standard_boundary(p: SpiralParams, theta):
    """Parametrization ``beta(theta)`` of the boundary of ``U``.

    ``theta`` is first reduced into the window ``(theta* - 2 pi, theta*]``.
    """
    A, B, ts = constants(p)
    th = np.asarray(theta, dtype=float)
    th = th - TWO_PI * np.ceil((th - ts) / TWO_PI)
    tl = math.tan(p.lam)
    slope = np.where(th >= 0, B, A)
    return _out(np.exp((1j + slope * (1 + 1j * tl)) * th))


def dual(R: RadiusFunction) -> RadiusFunction:
    """Radius function ``theta -> 1 / R(-theta)`` of the dual domain."""
    return R.dual()


def contains(R: RadiusFunction, lam: float, w):
    """Whether ``w`` lies in the (open) domain of ``R``."""
    lam = check_lambda(lam)
    w = np.asarray(w, dtype=complex)
    mod = np.abs(w)
    inside = np.ones(w.shape, dtype=bool)
    nz = mod > 0
    if np.any(nz):
        th = lambda_arg(lam, w[nz])
        inside[nz] = np.log(mod[nz]) < R.log_radius(th)
    return _out(inside)


def scale_domain(w0: complex, R: RadiusFunction, lam: float, n: int | None = None) -> RadiusFunction:
    """Radius function of ``w0 * Omega``: ``theta -> |w0| R(theta - theta0)``.

    A pure dilation keeps the variant; a rotation resamples onto ``n``
    uniform knots (the knot count of ``R`` when it is sampled).
    """
    if w0 == 0:
        raise OriginError("cannot scale a domain by zero")
    r0, th0 = decompose(lam, w0)
    if min(th0, TWO_PI - th0) < 1e-12:
        return R.scaled(r0)
    if n is None:
        n = R.n if isinstance(R, SampledRadius) else DEFAULT_KNOTS
    grid = knot_grid(n)
    return SampledRadius(R.log_radius(grid - th0) + math.log(r0))


def boundary_polyline(R: RadiusFunction, lam: float, n: int) -> np.ndarray:
    """``n`` boundary points ``P_lam(R(theta_j), theta_j)`` with uniform ``theta_j``."""
    if n < 3:
        raise ConstraintError("a boundary polyline needs n >= 3")
    lam = check_lambda(lam)
    th = knot_grid(n)
    return spiral_exp(lam, R.log_radius(th), th)
