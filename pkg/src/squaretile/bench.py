"""Paired benchmark harness: random flat trees, both algorithms per tree,
per-run metric records, per-size aggregate statistics, CSV/JSON export.

Reproducibility contract: every run's weights come from a Mersenne
Twister (stdlib random.Random) seeded with a value derived from
(master_seed, size, rep) through SHA-256, so any single run can be
regenerated in isolation on any platform.
"""

from __future__ import annotations

import csv
import hashlib
import json
import random
import statistics
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .geometry import Region
from .hierarchy import HierarchyNode
from .layout import layout_squarified
from .metrics import METRIC_NAMES, LayoutMetrics, RunRecord, compare, measure
from .plus import layout_plus

FULL_SIZES = (10, 50, 100, 500, 1000, 2000, 3000, 4000)
FULL_REPS = 500
DESK_SIZES = (10, 100, 1000)
DESK_REPS = 200
DEFAULT_CANVAS = Region(0.0, 0.0, 1920.0, 1080.0)
DEFAULT_WEIGHT_RANGE = (1, 1_000_000)
DEFAULT_SEED = 42

RECORDS_HEADER = ("size", "rep", "seed", "algo",
                  "mean_ar", "weighted_mean_ar", "std_dev_ar")
STATS_HEADER = ("size", "metric", "success_rate", "mean_improvement_pct",
                "median_sq", "median_plus", "max_improvement_pct")


class BenchError(RuntimeError):
    """A benchmark run failed; the message carries the offending seed."""


@dataclass
class BenchConfig:
    sizes: tuple[int, ...] = FULL_SIZES
    reps: int = FULL_REPS
    canvas: Region = DEFAULT_CANVAS
    weight_range: tuple[int, int] = DEFAULT_WEIGHT_RANGE
    master_seed: int = DEFAULT_SEED

    def validate(self) -> None:
        if not self.sizes or any(s < 1 for s in self.sizes):
            raise ValueError(f"sizes must be positive, got {self.sizes}")
        if self.reps < 1:
            raise ValueError(f"reps must be >= 1, got {self.reps}")
        lo, hi = self.weight_range
        if lo < 1 or hi < lo:
            raise ValueError(f"bad weight range {self.weight_range}")
        if not 0 <= self.master_seed < 2 ** 64:
            raise ValueError(f"master seed must fit 64 bits unsigned,"
                             f" got {self.master_seed}")


def subseed(master_seed: int, size: int, rep: int) -> int:
    """Derive the per-run seed: first 8 bytes of
    SHA-256("{master_seed}:{size}:{rep}"), big endian."""
    digest = hashlib.sha256(f"{master_seed}:{size}:{rep}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def gen_tree(size: int, seed: int,
             weight_range: tuple[int, int] = DEFAULT_WEIGHT_RANGE
             ) -> HierarchyNode:
    """Flat random tree: a root with `size` leaves whose integer weights
    are drawn uniformly from weight_range by random.Random(seed)."""
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    rng = random.Random(seed)
    lo, hi = weight_range
    children = [HierarchyNode(f"n{i}", weight=rng.randint(lo, hi))
                for i in range(1, size + 1)]
    return HierarchyNode("root", children=children)


def run_case(size: int, reps: int, config: BenchConfig) -> list[RunRecord]:
    """All reps for one size.  Both algorithms see the identical tree."""
    config.validate()
    records = []
    for rep in range(reps):
        seed = subseed(config.master_seed, size, rep)
        tree = gen_tree(size, seed, config.weight_range)
        try:
            sq = measure(layout_squarified(tree, config.canvas))
            plus = measure(layout_plus(tree, config.canvas))
        except Exception as exc:
            raise BenchError(
                f"layout failed at size={size} rep={rep} seed={seed}: {exc}"
            ) from exc
        records.append(RunRecord(size=size, rep=rep, seed=seed,
                                 squarified=sq, plus=plus))
    return records


@dataclass(frozen=True)
class MetricStats:
    """Aggregate of one metric over all reps of one size."""

    success_rate: float
    mean_improvement_pct: float
    mean_improvement_success_pct: float
    median_sq: float
    median_plus: float
    max_improvement_pct: float


@dataclass(frozen=True)
class AggregateStats:
    size: int
    reps: int
    metrics: dict[str, MetricStats] = field(default_factory=dict)


def aggregate(records: Sequence[RunRecord]) -> AggregateStats:
    """Collapse the records of one size into per-metric statistics.

    Mean improvement averages over ALL runs, regressions included; the
    successes-only mean is reported alongside.  Medians use the lower
    median for even counts.
    """
    if not records:
        raise ValueError("cannot aggregate zero records")
    sizes = {r.size for r in records}
    if len(sizes) != 1:
        raise ValueError(f"records mix sizes {sorted(sizes)}")

    stats: dict[str, MetricStats] = {}
    for metric in METRIC_NAMES:
        outcomes = [compare(r, metric) for r in records]
        improvements = [pct for _, pct in outcomes]
        wins = [pct for ok, pct in outcomes if ok]
        stats[metric] = MetricStats(
            success_rate=len(wins) / len(records),
            mean_improvement_pct=statistics.fmean(improvements),
            mean_improvement_success_pct=(statistics.fmean(wins)
                                          if wins else 0.0),
            median_sq=statistics.median_low(
                getattr(r.squarified, metric) for r in records),
            median_plus=statistics.median_low(
                getattr(r.plus, metric) for r in records),
            max_improvement_pct=max(improvements))
    return AggregateStats(size=sizes.pop(), reps=len(records), metrics=stats)


def _fmt(value: float) -> str:
    return format(value, ".6g")


def export_records_csv(records: Iterable[RunRecord], path) -> None:
    """One CSV row per (run, algorithm), reals at 6 significant digits,
    ordered by size, rep, then algorithm name ascending."""
    ordered = sorted(records, key=lambda r: (r.size, r.rep))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RECORDS_HEADER)
        for rec in ordered:
            for algo, m in (("plus", rec.plus), ("squarified", rec.squarified)):
                writer.writerow((rec.size, rec.rep, rec.seed, algo,
                                 _fmt(m.mean_ar), _fmt(m.weighted_mean_ar),
                                 _fmt(m.std_dev_ar)))


def export_stats_csv(stats: Iterable[AggregateStats], path) -> None:
    """One CSV row per (size, metric), sizes ascending, metrics in
    declaration order."""
    ordered = sorted(stats, key=lambda s: s.size)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(STATS_HEADER)
        for agg in ordered:
            for metric in METRIC_NAMES:
                ms = agg.metrics[metric]
                writer.writerow((agg.size, metric,
                                 _fmt(ms.success_rate),
                                 _fmt(ms.mean_improvement_pct),
                                 _fmt(ms.median_sq),
                                 _fmt(ms.median_plus),
                                 _fmt(ms.max_improvement_pct)))


def export_stats_json(stats: Iterable[AggregateStats], path,
                      config: BenchConfig | None = None) -> None:
    """Full-precision mirror of the aggregate stats, including the
    successes-only mean that the pinned CSV schema cannot carry."""
    ordered = sorted(stats, key=lambda s: s.size)
    doc: dict = {"cases": []}
    if config is not None:
        doc["config"] = {
            "sizes": list(config.sizes),
            "reps": config.reps,
            "canvas": {"width": config.canvas.width,
                       "height": config.canvas.height},
            "weight_range": list(config.weight_range),
            "master_seed": config.master_seed,
        }
    for agg in ordered:
        case = {"size": agg.size, "reps": agg.reps, "metrics": {}}
        for metric in METRIC_NAMES:
            ms = agg.metrics[metric]
            case["metrics"][metric] = {
                "success_rate": ms.success_rate,
                "mean_improvement_pct": ms.mean_improvement_pct,
                "mean_improvement_success_pct": ms.mean_improvement_success_pct,
                "median_sq": ms.median_sq,
                "median_plus": ms.median_plus,
                "max_improvement_pct": ms.max_improvement_pct,
            }
        doc["cases"].append(case)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def format_stats_table(stats: Sequence[AggregateStats]) -> str:
    """Human-readable aggregate table for the terminal."""
    header = (f"{'size':>6}  {'metric':<16} {'success%':>9} {'mean_imp%':>10}"
              f" {'succ_imp%':>10} {'median_sq':>11} {'median_plus':>11}"
              f" {'max_imp%':>9}")
    lines = [header, "-" * len(header)]
    for agg in sorted(stats, key=lambda s: s.size):
        for metric in METRIC_NAMES:
            ms = agg.metrics[metric]
            lines.append(
                f"{agg.size:>6}  {metric:<16} {ms.success_rate * 100:>9.2f}"
                f" {ms.mean_improvement_pct:>10.3f}"
                f" {ms.mean_improvement_success_pct:>10.3f}"
                f" {ms.median_sq:>11.5f} {ms.median_plus:>11.5f}"
                f" {ms.max_improvement_pct:>9.3f}")
    return "\n".join(lines)
