"""CSV and SVG readers/writers for radius profiles, boundaries and point lists."""

from __future__ import annotations

import csv
import io
from pathlib import Path

import numpy as np

from .domain import DEFAULT_KNOTS, SampledRadius
from .errors import ConstraintError


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def read_radius_csv(source, n: int = DEFAULT_KNOTS) -> SampledRadius:
    """Read a ``theta,R`` file (theta in radians) and resample onto ``n`` knots."""
    text = Path(source).read_text() if not hasattr(source, "read") else source.read()
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and any(c.strip() for c in r)]
    if not rows or [c.strip() for c in rows[0]] != ["theta", "R"]:
        raise ConstraintError("radius file must start with the header 'theta,R'")
    try:
        data = np.array([[float(a), float(b)] for a, b in rows[1:]])
    except ValueError as exc:
        raise ConstraintError(f"malformed radius file: {exc}") from None
    if data.size == 0:
        raise ConstraintError("radius file has no data rows")
    return SampledRadius.from_samples(data[:, 0], data[:, 1], n)


def write_radius_csv(fh, theta, R) -> None:
    fh.write("theta,R\n")
    for t, r in zip(theta, R):
        fh.write(f"{_fmt(t)},{_fmt(r)}\n")


def boundary_csv(points) -> str:
    lines = ["x,y"]
    lines += [f"{_fmt(w.real)},{_fmt(w.imag)}" for w in np.asarray(points, dtype=complex)]
    return "\n".join(lines) + "\n"


def boundary_svg(points, size: int = 512, stroke: str = "#000000", stroke_width: float = 1.0) -> str:
    """Single closed path; y is flipped so the picture has the usual orientation."""
    pts = np.asarray(points, dtype=complex)
    x, y = pts.real, -pts.imag + 0.0  # avoid printing -0
    lo_x, hi_x, lo_y, hi_y = x.min(), x.max(), y.min(), y.max()
    pad = 0.05 * max(hi_x - lo_x, hi_y - lo_y, 1e-12)
    vb = (lo_x - pad, lo_y - pad, hi_x - lo_x + 2 * pad, hi_y - lo_y + 2 * pad)
    # stroke width in user units so it looks the same at any scale
    sw = stroke_width * max(vb[2], vb[3]) / size
    d = "M " + " L ".join(f"{_fmt(a)} {_fmt(b)}" for a, b in zip(x, y)) + " Z"
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{" ".join(_fmt(v) for v in vb)}">\n'
        f'  <path d="{d}" fill="none" stroke="{stroke}" stroke-width="{_fmt(sw)}"/>\n'
        "</svg>\n"
    )


def parse_points(spec: str) -> np.ndarray:
    """``"x,y;x,y;..."`` into complex points."""
    pts = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            a, b = chunk.split(",")
            pts.append(complex(float(a), float(b)))
        except ValueError:
            raise ConstraintError(f"cannot parse point {chunk!r}; expected 'x,y'") from None
    if not pts:
        raise ConstraintError("no points given")
    return np.array(pts)


def read_points_csv(source) -> np.ndarray:
    """Points from an ``x,y`` CSV file (header required)."""
    text = Path(source).read_text() if not hasattr(source, "read") else source.read()
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows or [c.strip() for c in rows[0]] != ["x", "y"]:
        raise ConstraintError("point file must start with the header 'x,y'")
    return parse_points(";".join(",".join(r) for r in rows[1:]))


def point_table(z, w, names=("fx", "fy")) -> str:
    """CSV with input points and images; the point at infinity prints as ``inf``."""
    lines = [f"x,y,{names[0]},{names[1]}"]
    for a, b in zip(z, w):
        if b is None:
            img = "inf,inf"
        else:
            img = f"{_fmt(b.real)},{_fmt(b.imag)}"
        lines.append(f"{_fmt(a.real)},{_fmt(a.imag)},{img}")
    return "\n".join(lines) + "\n"
