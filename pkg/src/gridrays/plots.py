"""Figure rendering.  The only module that touches floating point.

Figures are written straight to files (SVG, PNG, PDF -- whatever the output
extension asks for); there is no interactive display.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.collections import LineCollection

from .errors import DiagonalError
from .system import RaySystem

__all__ = ["render_tree", "plot_error_profile"]


def render_tree(sys_: RaySystem, path: str) -> None:
    """Draw the whole ray tree: parent edges, split squares, leaf crosses."""
    segments = []
    for p in sys_.points():
        q = sys_.parent(p)
        segments.append(((q.x, q.y), (p.x, p.y)))
    splits_x, splits_y, leaves_x, leaves_y = [], [], [], []
    for d in range(sys_.bound):
        for s in sys_.split_points(d):
            splits_x.append(s.x)
            splits_y.append(s.y)
        for leaf in sys_.inner_leaves(d):
            leaves_x.append(leaf.x)
            leaves_y.append(leaf.y)

    fig, ax = plt.subplots(figsize=(8, 8))
    ax.add_collection(LineCollection(segments, colors="0.35", linewidths=0.7))
    if splits_x:
        ax.plot(splits_x, splits_y, "s", color="tab:blue", markersize=4,
                linestyle="none", label="split points")
    if leaves_x:
        ax.plot(leaves_x, leaves_y, "x", color="tab:red", markersize=5,
                linestyle="none", label="inner leaves")
    ax.set_xlim(-0.5, sys_.bound + 0.5)
    ax.set_ylim(-0.5, sys_.bound + 0.5)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(f"ray tree, bound {sys_.bound}")
    if splits_x or leaves_x:
        ax.legend(loc="upper right")
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def plot_error_profile(rows: list[DiagonalError], path: str) -> None:
    """Worst error per diagonal, with the 3/2 reference line."""
    xs = [r.diagonal for r in rows]
    ys = [r.error.numerator / r.error.denominator for r in rows]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(xs, ys, drawstyle="steps-mid", color="tab:blue")
    ax.axhline(1.5, color="tab:red", linestyle="--", linewidth=1, label="3/2")
    ax.set_xlabel("diagonal")
    ax.set_ylabel("max error")
    ax.set_ylim(bottom=0)
    ax.legend(loc="lower right")
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
