"""Command-line interface.

Angles given on the command line (``--lambda``, ``--beta``) and angles in JSON
witnesses are in degrees unless ``--radians`` is passed.  Radius files always
carry theta in radians.

Exit status: 0 when every requested check passes, 1 when a check fails, 2 for
usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import formats
from .charac import (
    check_derivative,
    check_dual_inclusion,
    check_inclusion_boundary,
    check_inclusion_interior,
    check_lipschitz,
    minimal_order,
)
from .conformal import g_map, integral_identity, map_g
from .domain import DEFAULT_KNOTS, SpiralParams, StandardU, StandardV, _near, boundary_polyline
from .errors import QuadratureError, SpirallikeError
from .reflection import FD_STEP, beltrami_analytic, beltrami_fd, dilatation_sup, extend

IDENTITY_ALPHAS = tuple(round(0.1 * k, 1) for k in range(1, 10))
IDENTITY_BETAS = tuple(round(-1.2 + 0.3 * k, 1) for k in range(9))
CONDITIONS = ("ii", "lipschitz", "iii", "iv", "dual")
DEFAULT_CONDITIONS = "ii,iii,iv,dual"
FD_TOL = 1e-6
IDENTITY_TOL = 1e-8


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Validated view of the parsed flags."""

    command: str
    lam: float
    alpha: Optional[float]
    angle_scale: float  # radians -> CLI unit
    output: Optional[str]
    figure: Optional[str]
    args: argparse.Namespace

    @property
    def params(self) -> SpiralParams:
        if self.alpha is None:
            raise UsageError(f"{self.command} needs --alpha")
        return SpiralParams(self.lam, self.alpha)

    def to_rad(self, x: float) -> float:
        return x / self.angle_scale


def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--lambda", dest="lam", type=float, default=0.0, help="spiral angle (degrees unless --radians)")
    c.add_argument("--alpha", type=float, help="order alpha in (0, 1)")
    c.add_argument("--radians", action="store_true", help="read and write angles in radians")
    c.add_argument("-o", "--output", help="write the report here instead of stdout")
    c.add_argument("--figure", help="also render a PNG figure to this path")
    return c


def _radius_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--variant", choices=("U", "V"), default="U", help="standard domain (default U)")
    p.add_argument("--radius-file", help="theta,R CSV (theta in radians) instead of a standard domain")
    p.add_argument("--knots", type=int, default=DEFAULT_KNOTS, help="knots for --radius-file resampling")


def _points_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--points", help="'x,y;x,y;...'")
    p.add_argument("--points-file", help="x,y CSV")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="spirallike", description="Strongly lambda-spirallike domains of order alpha.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("domain", parents=[common], help="emit a boundary polyline")
    _radius_opts(p)
    p.add_argument("--samples", type=int, default=360)
    p.add_argument("--out", choices=("csv", "svg"), default="csv")

    p = sub.add_parser("check", parents=[common], help="characterization checks as JSON")
    _radius_opts(p)
    p.add_argument("--grid", type=int, help="check grid (default: knots, or 720)")
    p.add_argument("--tol", type=float, help="override the pass tolerance")
    p.add_argument("--conditions", default=DEFAULT_CONDITIONS, help=f"comma list from {','.join(CONDITIONS)}")
    p.add_argument("--out", choices=("json",), default="json")

    p = sub.add_parser("min-order", parents=[common], help="smallest admissible order")
    _radius_opts(p)

    p = sub.add_parser("beltrami", parents=[common], help="dilatation of the reflection")
    _radius_opts(p)
    p.add_argument("--grid", type=int, default=720)
    p.add_argument("--fd", action="store_true", help="cross-check by finite differences")
    p.add_argument("--tol", type=float, default=FD_TOL, help="finite-difference agreement tolerance")
    p.add_argument("--no-points", action="store_true", help="omit per-sample output")
    p.add_argument("--out", choices=("json",), default="json")

    for name, text in (("map-g", "evaluate g"), ("extend", "evaluate the extension of g")):
        p = sub.add_parser(name, parents=[common], help=text)
        _points_opts(p)
        p.add_argument("--out", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify-identity", parents=[common], help="check the closed-form integral")
    p.add_argument("--beta", type=float, help="single beta (default: a grid)")
    p.add_argument("--tol", type=float, default=IDENTITY_TOL)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    return ap


def _config(ns: argparse.Namespace) -> RunConfig:
    scale = 1.0 if ns.radians else 180.0 / math.pi
    lam = ns.lam / scale
    for name in ("samples", "grid", "knots"):
        v = getattr(ns, name, None)
        if v is not None and v < 8:
            raise UsageError(f"--{name} must be >= 8")
    if ns.alpha is not None:
        SpiralParams(lam, ns.alpha)  # validate before dispatch
    elif abs(lam) >= math.pi / 2:
        raise UsageError("|lambda| must be below a right angle")
    return RunConfig(ns.command, lam, ns.alpha, scale, ns.output, ns.figure, ns)


def _radius(cfg: RunConfig):
    a = cfg.args
    if a.radius_file:
        return formats.read_radius_csv(a.radius_file, a.knots)
    p = cfg.params
    return StandardU(p) if a.variant == "U" else StandardV(p)


def _points(cfg: RunConfig) -> np.ndarray:
    a = cfg.args
    if bool(a.points) == bool(a.points_file):
        raise UsageError("give exactly one of --points and --points-file")
    return formats.parse_points(a.points) if a.points else formats.read_points_csv(a.points_file)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def cmd_domain(cfg: RunConfig):
    R = _radius(cfg)
    pts = boundary_polyline(R, cfg.lam, cfg.args.samples)
    text = formats.boundary_svg(pts) if cfg.args.out == "svg" else formats.boundary_csv(pts)
    if cfg.figure:
        from .plotting import plot_boundary

        plot_boundary(cfg.figure, pts)
    return text, True


_CHECKERS = {
    "ii": lambda R, p, g, t: check_derivative(R, p, t),
    "lipschitz": check_lipschitz,
    "iii": check_inclusion_boundary,
    "iv": check_inclusion_interior,
    "dual": check_dual_inclusion,
}


def cmd_check(cfg: RunConfig):
    R, p = _radius(cfg), cfg.params
    wanted = [c.strip() for c in cfg.args.conditions.split(",") if c.strip()]
    bad = [c for c in wanted if c not in _CHECKERS]
    if bad or not wanted:
        raise UsageError(f"unknown conditions {bad}; choose from {','.join(CONDITIONS)}")
    reports = [_CHECKERS[c](R, p, cfg.args.grid, cfg.args.tol) for c in wanted]
    out = [r.to_json(cfg.angle_scale) for r in reports]
    if cfg.figure:
        from .plotting import plot_boundary

        plot_boundary(cfg.figure, boundary_polyline(R, p.lam, 720))
    return _dumps(out), all(r.passed for r in reports)


def cmd_min_order(cfg: RunConfig):
    R = _radius(cfg)
    return f"{minimal_order(R, cfg.lam):.17g}\n", True


def cmd_beltrami(cfg: RunConfig):
    R, p = _radius(cfg), cfg.params
    rep = dilatation_sup(R, p, cfg.args.grid)
    ok = rep.passed
    if cfg.args.fd:
        # finite differences need room around the ridges
        keep = ~_near(rep.theta, R.ridges(), 10 * FD_STEP * (1 + abs(math.tan(p.lam))))
        dev = np.abs(beltrami_fd(R, p.lam, rep.w[keep]) - beltrami_analytic(R, p.lam, rep.theta[keep]))
        rep.fd_max_dev = float(dev.max()) if dev.size else 0.0
        ok = ok and rep.fd_max_dev <= cfg.args.tol
    out = rep.to_json(cfg.angle_scale, include_points=not cfg.args.no_points)
    out["pass"] = bool(ok)
    if cfg.figure:
        from .plotting import plot_dilatation

        plot_dilatation(cfg.figure, rep)
    return _dumps(out), ok


def _point_output(cfg, z, w, names):
    if cfg.args.out == "json":
        rows = []
        for a, b in zip(z, w):
            img = None if b is None else [float(b.real), float(b.imag)]
            rows.append({"z": [float(a.real), float(a.imag)], names[0][:-1]: img})
        return _dumps(rows)
    return formats.point_table(z, w, names)


def cmd_map_g(cfg: RunConfig):
    p, z = cfg.params, _points(cfg)
    w = np.atleast_1d(map_g(p, z))
    if cfg.figure:
        from .domain import standard_boundary
        from .plotting import plot_boundary
        from .spiral import TWO_PI

        ring = standard_boundary(p, TWO_PI * np.arange(720) / 720)
        plot_boundary(cfg.figure, ring, marks=w)
    return _point_output(cfg, z, list(w), ("gx", "gy")), True


def cmd_extend(cfg: RunConfig):
    p, z = cfg.params, _points(cfg)
    R = StandardU(p)
    f = g_map(p, with_derivative=False)
    w = [complex(v) for v in np.atleast_1d(extend(f, R, p.lam, z))]
    return _point_output(cfg, z, w, ("fx", "fy")), True


def cmd_verify_identity(cfg: RunConfig):
    a = cfg.args
    alphas = (a.alpha,) if a.alpha is not None else IDENTITY_ALPHAS
    if a.beta is not None:
        betas = (cfg.to_rad(a.beta),)
    else:
        betas = IDENTITY_BETAS
    rows = []
    for al in alphas:
        for be in betas:
            res = integral_identity(al, be)
            rows.append((al, be, res.lhs, res.rhs, res.rel_err))
    ok = all(r[4] <= a.tol for r in rows)
    if a.out == "json":
        text = _dumps(
            [
                {"alpha": al, "beta": be * cfg.angle_scale, "lhs": l, "rhs": r, "rel_err": e, "pass": e <= a.tol}
                for al, be, l, r, e in rows
            ]
        )
    else:
        lines = ["alpha,beta,lhs,rhs,rel_err"]
        lines += [
            ",".join(format(v, ".17g") for v in (al, be * cfg.angle_scale, l, r, e)) for al, be, l, r, e in rows
        ]
        text = "\n".join(lines) + "\n"
    if cfg.figure:
        from .plotting import plot_identity

        plot_identity(cfg.figure, [(al, be * cfg.angle_scale, l, r, e) for al, be, l, r, e in rows])
    return text, ok


COMMANDS = {
    "domain": cmd_domain,
    "check": cmd_check,
    "min-order": cmd_min_order,
    "beltrami": cmd_beltrami,
    "map-g": cmd_map_g,
    "extend": cmd_extend,
    "verify-identity": cmd_verify_identity,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        cfg = _config(ns)
        text, ok = COMMANDS[ns.command](cfg)
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SpirallikeError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
