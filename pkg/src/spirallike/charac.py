"""Checkers for strong lambda-spirallikeness of order alpha.

Each checker returns a :class:`CheckReport` with a signed margin: non-negative
means the condition holds on the sampled set.  Margins are in slope units for
the derivative and Lipschitz conditions and in log-radius units for the
inclusion conditions.

All sweeps run on the uniform angle grid ``2 pi j / grid``.  For sampled
profiles the grid defaults to the knot grid, so piecewise-linear profiles are
checked without interpolation error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .domain import (
    DEFAULT_KNOTS,
    RadiusFunction,
    SampledRadius,
    SpiralParams,
    StandardV,
    constants,
)
from .errors import ConstraintError, UnboundedOrderError
from .spiral import TWO_PI, check_lambda

INTERIOR_SCALES = tuple(round(0.1 * k, 1) for k in range(1, 10))
EXTERIOR_SCALES = (1.1, 1.25, 1.5, 2.0, 4.0)


@dataclass
class CheckReport:
    condition: str
    passed: bool
    worst_margin: float
    witness: dict
    grid: int
    tolerance: float
    extra: dict = field(default_factory=dict)

    def to_json(self, angle_scale: float = 1.0) -> dict:
        """JSON-ready dict; ``angle_scale`` converts witness angles (e.g. to degrees)."""
        witness = {k: (v * angle_scale if k.startswith("theta") else v) for k, v in self.witness.items()}
        out = {
            "condition": self.condition,
            "pass": bool(self.passed),
            "margin": float(self.worst_margin),
            "witness": witness,
            "grid": int(self.grid),
            "tolerance": float(self.tolerance),
        }
        out.update(self.extra)
        return out


def _grid_for(R: RadiusFunction, grid: int | None) -> int:
    if grid is None:
        grid = R.n if isinstance(R, SampledRadius) else DEFAULT_KNOTS
    if grid < 8:
        raise ConstraintError("check grids need at least 8 points")
    return int(grid)


def _report(condition, margins, witness_fn, grid, tol, **extra):
    k = int(np.argmin(margins))
    worst = float(margins.flat[k])
    return CheckReport(condition, worst >= -tol, worst, witness_fn(k), grid, tol, dict(extra))


def _piece_midpoints(R: RadiusFunction) -> np.ndarray:
    ridges = np.sort(R.ridges())
    if len(ridges) == 0:
        return np.array([math.pi])
    ends = np.append(ridges, ridges[0] + TWO_PI)
    return np.mod(0.5 * (ends[:-1] + ends[1:]), TWO_PI)


def _pair_angles(grid: int):
    """Index sums ``(i + j) mod grid`` mapped back to exact grid angles."""
    step = TWO_PI / grid
    i = np.arange(grid)[:, None]
    j = np.arange(1, grid)[None, :]
    return i * step, j * step, ((i + j) % grid) * step


def _std_log_u(p, theta):
    A, B, _ = constants(p)
    return np.maximum(B * theta, -A * (TWO_PI - theta))


def check_derivative(R: RadiusFunction, p: SpiralParams, tol: float | None = None) -> CheckReport:
    """``|rho' + sin(lam)cos(lam)| <= cos^2(lam) tan(pi alpha/2)`` on every piece."""
    s = R.slopes()
    dev = np.abs(s + p.sincos)
    margins = p.slope_bound - dev
    mids = _piece_midpoints(R)
    tol = R.tolerance(p) if tol is None else tol
    return _report("ii", margins, lambda k: {"theta": float(mids[k])}, len(s), tol)


def check_lipschitz(
    R: RadiusFunction, p: SpiralParams, grid: int | None = None, tol: float | None = None
) -> CheckReport:
    """``B (t2 - t1) <= rho(t2) - rho(t1) <= A (t2 - t1)`` over all grid pairs.

    Margins are divided by ``t2 - t1`` so they compare directly with
    :func:`check_derivative`.
    """
    A, B, _ = constants(p)
    g = _grid_for(R, grid)
    step = TWO_PI / g
    rho = R.log_radius(np.arange(g) * step)
    i = np.arange(g)[:, None]
    L = np.arange(1, g + 1)[None, :]
    chord = (rho[(i + L) % g] - rho[i]) / (L * step)
    margins = np.minimum(chord - B, A - chord)
    tol = R.tolerance(p) if tol is None else tol

    def witness(k):
        a, b = divmod(k, g)
        return {"theta0": float(a * step), "theta": float(a * step + (b + 1) * step)}

    return _report("lipschitz", margins, witness, g, tol)


def inclusion_margins(R: RadiusFunction, p: SpiralParams, grid: int) -> np.ndarray:
    """``log R(t0 + t) - log R(t0) - log R_U(t)`` for ``t0`` on the grid and ``t`` in (0, 2 pi)."""
    th0, th, th_sum = _pair_angles(grid)
    rho0 = R.log_radius(th0)
    return R.log_radius(th_sum) - rho0 - _std_log_u(p, th)


def check_inclusion_boundary(
    R: RadiusFunction, p: SpiralParams, grid: int | None = None, tol: float | None = None
) -> CheckReport:
    """Brute-force ``w U subset Omega`` for boundary points ``w``."""
    g = _grid_for(R, grid)
    margins = inclusion_margins(R, p, g)
    tol = R.tolerance(p) if tol is None else tol
    step = TWO_PI / g

    def witness(k):
        a, b = divmod(k, g - 1)
        return {"theta0": float(a * step), "theta": float((b + 1) * step)}

    return _report("iii", margins, witness, g, tol)


def check_inclusion_interior(
    R: RadiusFunction,
    p: SpiralParams,
    grid: int | None = None,
    tol: float | None = None,
    scales=INTERIOR_SCALES,
) -> CheckReport:
    """``w U subset Omega`` for interior ``w = P(t R(t0), t0)``, ``t`` in ``scales``.

    The copy ``w U`` has radius ``t R(t0) R_U(theta - t0)``, so its margin
    against ``Omega`` is the boundary margin minus ``log t``.
    """
    g = _grid_for(R, grid)
    base = inclusion_margins(R, p, g)
    tol = R.tolerance(p) if tol is None else tol
    step = TWO_PI / g
    per_scale = np.array([np.min(base - math.log(t)) for t in scales])
    s = int(np.argmin(per_scale))
    k = int(np.argmin(base - math.log(scales[s])))
    a, b = divmod(k, g - 1)
    worst = float(per_scale[s])
    witness = {"theta0": float(a * step), "theta": float((b + 1) * step), "scale": scales[s]}
    return CheckReport("iv", worst >= -tol, worst, witness, g, tol)


def check_dual_inclusion(
    R: RadiusFunction,
    p: SpiralParams,
    grid: int | None = None,
    tol: float | None = None,
    scales=EXTERIOR_SCALES,
) -> CheckReport:
    """``Omega subset w V`` for boundary ``w`` and for a ring of exterior ``w``.

    The exterior ring uses ``w = P(t R(t0), t0)`` with ``t > 1``; its margin
    is reported separately as ``exterior_margin``.
    """
    g = _grid_for(R, grid)
    th0, th, th_sum = _pair_angles(g)
    rho_v = StandardV(p).log_radius(th)
    margins = R.log_radius(th0) + rho_v - R.log_radius(th_sum)
    ext = min(float(np.min(margins)) + math.log(t) for t in scales)
    tol = R.tolerance(p) if tol is None else tol
    step = TWO_PI / g

    def witness(k):
        a, b = divmod(k, g - 1)
        return {"theta0": float(a * step), "theta": float((b + 1) * step)}

    rep = _report("dual", margins, witness, g, tol, exterior_margin=ext)
    rep.passed = rep.passed and ext >= -tol
    return rep


def check_all(R: RadiusFunction, p: SpiralParams, grid: int | None = None, tol: float | None = None):
    """Run every checker; returns reports keyed by condition id."""
    return {
        "ii": check_derivative(R, p, tol),
        "lipschitz": check_lipschitz(R, p, grid, tol),
        "iii": check_inclusion_boundary(R, p, grid, tol),
        "iv": check_inclusion_interior(R, p, grid, tol),
        "dual": check_dual_inclusion(R, p, grid, tol),
    }


def minimal_order(R: RadiusFunction, lam: float) -> float:
    """Infimum of the orders alpha for which ``R`` satisfies the derivative bound.

    ``(2/pi) arctan(max(sup |rho' + sin cos| / cos^2, tan|lam|))``.  The
    second term keeps ``|lam| < pi alpha / 2``.  A result of 0 means every
    positive order works.
    """
    lam = check_lambda(lam)
    s = np.asarray(R.slopes(), dtype=float)
    if not np.all(np.isfinite(s)):
        raise UnboundedOrderError("log-radius derivative is unbounded")
    c2 = math.cos(lam) ** 2
    sup = float(np.max(np.abs(s + math.sin(lam) * math.cos(lam)))) / c2
    return 2.0 / math.pi * math.atan(max(sup, math.tan(abs(lam))))


__all__ = [
    "CheckReport",
    "check_derivative",
    "check_lipschitz",
    "check_inclusion_boundary",
    "check_inclusion_interior",
    "check_dual_inclusion",
    "check_all",
    "inclusion_margins",
    "minimal_order",
]
