"""Matplotlib figures written next to the delimited reports.

Figures are rendered with the Agg backend and saved straight to disk; nothing
here opens a window.
"""

from __future__ import annotations

from contextlib import contextmanager

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.linewidth": 0.8,
    "lines.linewidth": 1.2,
    "xtick.direction": "in",
    "ytick.direction": "in",
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


@contextmanager
def figure(path, figsize=(5.0, 4.0)):
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=figsize)
        try:
            yield ax
            fig.savefig(path)
        finally:
            plt.close(fig)


def plot_boundary(path, points, title=None, marks=None):
    pts = np.asarray(points, dtype=complex)
    closed = np.append(pts, pts[:1])
    with figure(path, (4.5, 4.5)) as ax:
        ax.plot(closed.real, closed.imag, "k-")
        ax.plot([0], [0], "k+", ms=6)
        if marks is not None:
            m = np.asarray(marks, dtype=complex)
            ax.plot(m.real, m.imag, "o", ms=3, color="tab:red")
        ax.set_aspect("equal")
        ax.set_xlabel("Re w")
        ax.set_ylabel("Im w")
        if title:
            ax.set_title(title)


def plot_dilatation(path, report):
    order = np.argsort(report.theta)
    with figure(path) as ax:
        ax.plot(report.theta[order], report.mu_abs[order], ".", ms=2, color="tab:blue", label="|mu|")
        ax.axhline(report.bound, color="tab:red", ls="--", label="sin(pi alpha/2)")
        ax.set_xlabel("lambda-argument")
        ax.set_ylabel("|mu|")
        ax.set_ylim(0, 1)
        ax.legend(frameon=False, loc="lower right")


def plot_identity(path, rows):
    alphas = sorted({r[0] for r in rows})
    with figure(path) as ax:
        for a in alphas:
            sel = [r for r in rows if r[0] == a]
            err = np.maximum([r[4] for r in sel], 1e-18)
            ax.semilogy([r[1] for r in sel], err, "o-", ms=3, label=f"alpha={a:g}")
        ax.set_xlabel("beta")
        ax.set_ylabel("relative error")
        ax.legend(frameon=False, fontsize=7, ncol=2)
