"""Figure rendering for benchmark reports.

Kept separate from the bench module on purpose: the bench only exports
data; these figures are drawn from the aggregated statistics that also
feed stats.csv.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .bench import AggregateStats  # noqa: E402
from .metrics import METRIC_NAMES  # noqa: E402

_LABELS = {
    "mean_ar": "mean aspect ratio",
    "weighted_mean_ar": "weighted mean aspect ratio",
    "std_dev_ar": "aspect-ratio std dev",
}


def _sorted(stats: Sequence[AggregateStats]) -> list[AggregateStats]:
    if not stats:
        raise ValueError("no stats to plot")
    return sorted(stats, key=lambda s: s.size)


def _size_axis(ax, sizes):
    if len(sizes) > 1 and max(sizes) / min(sizes) >= 10:
        ax.set_xscale("log")
    ax.set_xlabel("tree size (leaves)")
    ax.grid(True, alpha=0.3)


def save_stats_figures(stats: Sequence[AggregateStats], out_dir) -> list[Path]:
    """Write the three report figures as PNGs and return their paths."""
    ordered = _sorted(stats)
    sizes = [s.size for s in ordered]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for metric in METRIC_NAMES:
        ax.plot(sizes, [s.metrics[metric].mean_improvement_pct for s in ordered],
                marker="o", label=_LABELS[metric])
    _size_axis(ax, sizes)
    ax.set_ylabel("mean improvement (%)")
    ax.set_title("Improvement over the classic layout, by tree size")
    ax.legend()
    fig.tight_layout()
    target = out / "improvement_by_size.png"
    fig.savefig(target, dpi=150)
    plt.close(fig)
    written.append(target)

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for metric in METRIC_NAMES:
        ax.plot(sizes, [s.metrics[metric].success_rate * 100 for s in ordered],
                marker="o", label=_LABELS[metric])
    _size_axis(ax, sizes)
    ax.set_ylabel("runs improved (%)")
    ax.set_ylim(0, 102)
    ax.set_title("Share of runs the inverting layout wins")
    ax.legend()
    fig.tight_layout()
    target = out / "success_rate_by_size.png"
    fig.savefig(target, dpi=150)
    plt.close(fig)
    written.append(target)

    fig, axes = plt.subplots(1, len(METRIC_NAMES), figsize=(12.0, 4.0))
    for ax, metric in zip(axes, METRIC_NAMES):
        ax.plot(sizes, [s.metrics[metric].median_sq for s in ordered],
                marker="s", label="squarified")
        ax.plot(sizes, [s.metrics[metric].median_plus for s in ordered],
                marker="o", label="plus")
        _size_axis(ax, sizes)
        ax.set_title(_LABELS[metric])
        ax.legend()
    axes[0].set_ylabel("median value")
    fig.tight_layout()
    target = out / "median_by_size.png"
    fig.savefig(target, dpi=150)
    plt.close(fig)
    written.append(target)

    return written
