"""Figures for the CLI report paths. Everything renders off-screen to files."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .algebra import ExactMatrix  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def plot_dimensions(reports: Sequence, path: str) -> str:
    """Assembled dimension vs the naive induced-from-stabilizer dimension, log scale."""
    gs = [r.genus for r in reports]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3.0))
        ax.plot(gs, [r.main for r in reports], "o-", label="assembled, $g^2-1$")
        ax.plot(gs, [r.naive for r in reports], "s--", label="naive, $2(g-1)(2g^2-g+1)$")
        ax.set_yscale("log")
        ax.set_xlabel("genus g")
        ax.set_ylabel("dimension")
        ax.set_xticks(gs)
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_sparsity(m: ExactMatrix, path: str, splits: Sequence[int] = (), title: str = "") -> str:
    """Nonzero pattern of a matrix with block boundaries marked."""
    pattern = [[1 if v else 0 for v in row] for row in m.nonzero_pattern()]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.0, 4.0))
        ax.imshow(pattern, cmap=ListedColormap(["white", "black"]), interpolation="nearest", vmin=0, vmax=1)
        for s in splits:
            ax.axhline(s - 0.5, color="tab:red", lw=0.8)
            ax.axvline(s - 0.5, color="tab:red", lw=0.8)
        ax.set_xticks([])
        ax.set_yticks([])
        if title:
            ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path
