"""Figure rendering for benchmark reports.

Images are written straight to files (Agg backend, no display needed). The
CSV and JSON outputs stay the primary record; figures are the quick-look
companion written alongside them.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .errors import EmptyDataError

__all__ = ["save_histogram_figure", "save_timing_figure"]


def save_histogram_figure(hist, path, title: str = "iterations to convergence") -> None:
    """Bar chart of a HistogramData, one bar per bin."""
    edges = np.asarray(hist.bin_edges, dtype=float)
    counts = np.asarray(hist.counts, dtype=float)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.bar(
        edges[:-1],
        counts,
        width=np.diff(edges),
        align="edge",
        color="#4878cf",
        edgecolor="white",
        linewidth=0.5,
    )
    if hist.scale == "log2":
        ax.set_xscale("log", base=2)
        ax.set_xlabel("iterations (octave bins)")
    else:
        ax.set_xlabel("iterations")
    ax.set_ylabel("matrices")
    ax.set_title(title)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def save_timing_figure(summary_rows, path, title: str = "time per matrix") -> None:
    """Grouped bars of seconds per matrix, one group per (n, mode), log scale."""
    rows = [r for r in summary_rows if r.get("time_per_matrix") is not None]
    if not rows:
        raise EmptyDataError("no summary rows to plot")
    groups = sorted({(r["n"], r["mode"]) for r in rows})
    algorithms = sorted({r["algorithm"] for r in rows})
    width = 0.8 / len(algorithms)
    centers = np.arange(len(groups), dtype=float)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for j, algorithm in enumerate(algorithms):
        heights = []
        for key in groups:
            match = [
                r for r in rows if (r["n"], r["mode"]) == key and r["algorithm"] == algorithm
            ]
            heights.append(match[0]["time_per_matrix"] if match else 0.0)
        offset = (j - (len(algorithms) - 1) / 2.0) * width
        ax.bar(centers + offset, heights, width=width, label=algorithm)
    ax.set_yscale("log")
    ax.set_xticks(centers)
    ax.set_xticklabels([f"n={n}\n{mode}" for n, mode in groups])
    ax.set_ylabel("seconds per matrix")
    ax.set_title(title)
    ax.legend(frameon=False)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
