"""Layout quality metrics and paired-run comparison records.

All three metrics are computed over leaf rectangles only; internal-node
regions are containers, not tiles.  Lower is better for every metric.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence

from .geometry import aspect_ratio
from .layout import LayoutResult

METRIC_NAMES = ("mean_ar", "weighted_mean_ar", "std_dev_ar")


def _leaf_ars(layout: LayoutResult) -> list[float]:
    ars = [aspect_ratio(region) for _, _, region in layout.leaves()]
    if not ars:
        raise ValueError("layout has no leaf placements")
    return ars


def mean_ar(layout: LayoutResult) -> float:
    """Plain arithmetic mean of the leaf rectangles' aspect ratios."""
    return statistics.fmean(_leaf_ars(layout))


def weighted_mean_ar(layout: LayoutResult,
                     weights: Sequence[float] | None = None) -> float:
    """Weight-weighted mean aspect ratio of the leaf rectangles.

    weights: optional explicit per-leaf weights in traversal order;
    defaults to the leaves' own weights.  A length mismatch raises.
    """
    leaves = list(layout.leaves())
    if not leaves:
        raise ValueError("layout has no leaf placements")
    if weights is None:
        weights = [node.weight for _, node, _ in leaves]
    if len(weights) != len(leaves):
        raise ValueError(
            f"{len(weights)} weights for {len(leaves)} leaves")
    for w in weights:
        if not (w > 0):
            raise ValueError(f"weights must be > 0, got {w!r}")
    total = math.fsum(weights)
    weighted = math.fsum(
        aspect_ratio(region) * w for (_, _, region), w in zip(leaves, weights))
    return weighted / total


def std_dev_ar(layout: LayoutResult) -> float:
    """Corrected (n-1) sample standard deviation of leaf aspect ratios.

    A single-leaf layout has no spread and yields 0.
    """
    ars = _leaf_ars(layout)
    if len(ars) == 1:
        return 0.0
    return statistics.stdev(ars)


@dataclass(frozen=True)
class LayoutMetrics:
    mean_ar: float
    weighted_mean_ar: float
    std_dev_ar: float
    n: int


def measure(layout: LayoutResult) -> LayoutMetrics:
    """All three metrics of one layout, plus the leaf count."""
    ars = _leaf_ars(layout)
    return LayoutMetrics(
        mean_ar=statistics.fmean(ars),
        weighted_mean_ar=weighted_mean_ar(layout),
        std_dev_ar=0.0 if len(ars) == 1 else statistics.stdev(ars),
        n=len(ars))


@dataclass(frozen=True)
class RunRecord:
    """One paired benchmark run: both algorithms on the identical tree."""

    size: int
    rep: int
    seed: int
    squarified: LayoutMetrics
    plus: LayoutMetrics


def compare(record: RunRecord, metric: str) -> tuple[bool, float]:
    """(success, improvement %) of the plus run against the baseline.

    success means strictly lower; improvement = (sq - plus) / sq * 100,
    negative when the plus run is worse, and defined as 0 when the
    baseline value is 0 (reachable only for std_dev_ar on one leaf).
    """
    if metric not in METRIC_NAMES:
        raise ValueError(f"unknown metric {metric!r}")
    sq = getattr(record.squarified, metric)
    plus = getattr(record.plus, metric)
    success = plus < sq
    pct = 0.0 if sq == 0 else (sq - plus) / sq * 100.0
    return success, pct
