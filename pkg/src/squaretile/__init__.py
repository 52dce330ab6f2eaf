"""Squarified treemap layouts, a direction-inverting variant, metrics,
and a paired benchmark harness."""

from .bench import (AggregateStats, BenchConfig, BenchError, MetricStats,
                    aggregate, export_records_csv, export_stats_csv,
                    export_stats_json, gen_tree, run_case, subseed)
from .geometry import (Direction, Region, aspect_ratio, bigger_side,
                       natural_direction, shrink, smaller_side, transpose)
from .hierarchy import HierarchyError, HierarchyNode, parse_hierarchy, validate_tree
from .layout import (LayoutError, LayoutResult, layout_squarified, layoutrow,
                     normalize_areas, worst)
from .metrics import (METRIC_NAMES, LayoutMetrics, RunRecord, compare,
                      mean_ar, measure, std_dev_ar, weighted_mean_ar)
from .plus import RowDecision, improve, layout_plus
from .svg import RenderOptions, to_svg

__version__ = "0.1.0"

__all__ = [
    "AggregateStats", "BenchConfig", "BenchError", "Direction",
    "HierarchyError", "HierarchyNode", "LayoutError", "LayoutMetrics",
    "LayoutResult", "METRIC_NAMES", "MetricStats", "Region", "RenderOptions",
    "RowDecision", "RunRecord", "aggregate", "aspect_ratio", "bigger_side",
    "compare", "export_records_csv", "export_stats_csv", "export_stats_json",
    "gen_tree", "improve", "layout_plus", "layout_squarified", "layoutrow",
    "mean_ar", "measure", "natural_direction", "normalize_areas",
    "parse_hierarchy", "run_case", "shrink", "smaller_side", "std_dev_ar",
    "subseed", "to_svg", "transpose", "validate_tree", "weighted_mean_ar",
    "worst",
]
