"""Command-line front end: lay out a tree, run the benchmark, or walk
through the built-in demo fixture."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import (BenchConfig, DESK_REPS, DESK_SIZES, DEFAULT_SEED,
                    FULL_REPS, FULL_SIZES, aggregate, export_records_csv,
                    export_stats_csv, export_stats_json, format_stats_table,
                    run_case)
from .geometry import Region, aspect_ratio
from .hierarchy import HierarchyError, HierarchyNode, parse_hierarchy
from .layout import LayoutError, LayoutResult, layout_squarified
from .metrics import measure
from .plus import layout_plus
from .svg import RenderOptions, to_svg

DEMO_CANVAS = Region(0.0, 0.0, 6.0, 4.0)


def demo_tree() -> HierarchyNode:
    """The classic seven-item fixture used by the demo subcommand."""
    weights = (6, 6, 4, 3, 2, 2, 1)
    children = [HierarchyNode(name, weight=w)
                for name, w in zip("abcdefg", weights)]
    return HierarchyNode("demo", children=children)


def _parse_canvas(text: str) -> Region:
    try:
        w, h = text.lower().split("x")
        region = Region(0.0, 0.0, float(w), float(h))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"canvas must look like 1920x1080, got {text!r}") from exc
    if region.width <= 0 or region.height <= 0:
        raise argparse.ArgumentTypeError("canvas sides must be > 0")
    return region


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"sizes must be comma-separated integers, got {text!r}") from exc
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def _layout_document(result: LayoutResult) -> dict:
    placements = {}
    for path, node, _, region in result.walk():
        entry = {
            "x": region.x, "y": region.y,
            "w": region.width, "h": region.height,
            "aspect_ratio": aspect_ratio(region),
            "leaf": node.is_leaf,
        }
        if node.is_leaf:
            entry["weight"] = node.weight
        placements[path] = entry
    canvas = result.canvas
    m = measure(result)
    return {
        "canvas": {"x": canvas.x, "y": canvas.y,
                   "w": canvas.width, "h": canvas.height},
        "metrics": {"mean_ar": m.mean_ar,
                    "weighted_mean_ar": m.weighted_mean_ar,
                    "std_dev_ar": m.std_dev_ar,
                    "leaves": m.n},
        "placements": placements,
    }


def _summary_line(algo: str, result: LayoutResult) -> str:
    m = measure(result)
    return (f"algo={algo} leaves={m.n}"
            f" mean_ar={m.mean_ar:.12g}"
            f" weighted_mean_ar={m.weighted_mean_ar:.12g}"
            f" std_dev_ar={m.std_dev_ar:.12g}")


def cmd_layout(args) -> int:
    with open(args.input) as fh:
        doc = json.load(fh)
    tree = parse_hierarchy(doc)
    if args.algo == "plus":
        result = layout_plus(tree, args.canvas)
    else:
        result = layout_squarified(tree, args.canvas)

    if args.format == "svg":
        opts = RenderOptions(scale=args.scale, label=args.labels)
        rendered = to_svg(result, opts)
    else:
        rendered = json.dumps(_layout_document(result), indent=2) + "\n"

    if args.out:
        Path(args.out).write_text(rendered)
        print(_summary_line(args.algo, result))
    else:
        sys.stdout.write(rendered)
        print(_summary_line(args.algo, result), file=sys.stderr)
    return 0


def cmd_bench(args) -> int:
    sizes = args.sizes if args.sizes else (FULL_SIZES if args.full else DESK_SIZES)
    reps = args.reps if args.reps is not None else (FULL_REPS if args.full
                                                    else DESK_REPS)
    config = BenchConfig(sizes=tuple(sizes), reps=reps, canvas=args.canvas,
                         master_seed=args.seed)
    config.validate()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    all_records = []
    stats = []
    for size in config.sizes:
        records = run_case(size, config.reps, config)
        all_records.extend(records)
        stats.append(aggregate(records))

    export_records_csv(all_records, out / "records.csv")
    export_stats_csv(stats, out / "stats.csv")
    export_stats_json(stats, out / "stats.json", config)
    print(format_stats_table(stats))
    written = ["records.csv", "stats.csv", "stats.json"]
    if not args.no_plots:
        from .plots import save_stats_figures
        written += [p.name for p in save_stats_figures(stats, out)]
    print(f"wrote {', '.join(written)} to {out}")
    return 0


def cmd_demo(args) -> int:
    tree = demo_tree()
    trace = []
    plus_result = layout_plus(tree, DEMO_CANVAS, trace=trace)
    sq_result = layout_squarified(tree, DEMO_CANVAS)

    print(f"demo fixture: weights 6,6,4,3,2,2,1 on a"
          f" {DEMO_CANVAS.width:g}x{DEMO_CANVAS.height:g} canvas")
    print("row decisions (plus):")
    for step, decision in enumerate(trace, 1):
        areas = ", ".join(format(a, "g") for a in decision.areas)
        print(f"  row {step}: areas=[{areas}]"
              f" actualAR={decision.actual_ar:.6f}"
              f" alternativeAR={decision.alternative_ar:.6f}"
              f" inverted={'yes' if decision.inverted else 'no'}"
              f" direction={decision.direction.value}")
    print(_summary_line("squarified", sq_result))
    print(_summary_line("plus", plus_result))

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    opts = RenderOptions(scale=100.0, label=True)
    for name, result in (("squarified", sq_result), ("plus", plus_result)):
        target = out / f"{name}.svg"
        target.write_text(to_svg(result, opts))
        print(f"wrote {target}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squaretile",
        description="Squarified treemap layouts with a direction-inverting"
                    " row heuristic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_layout = sub.add_parser("layout", help="lay out a weighted tree")
    p_layout.add_argument("input", help="hierarchy JSON file")
    p_layout.add_argument("--algo", choices=("squarified", "plus"),
                          default="plus")
    p_layout.add_argument("--canvas", type=_parse_canvas,
                          default=_parse_canvas("1920x1080"),
                          help="canvas as WxH (default 1920x1080)")
    p_layout.add_argument("--out", help="output file (default: stdout)")
    p_layout.add_argument("--format", choices=("json", "svg"), default="json")
    p_layout.add_argument("--scale", type=float, default=1.0,
                          help="SVG pixels per layout unit")
    p_layout.add_argument("--labels", action="store_true",
                          help="draw node names in the SVG")
    p_layout.set_defaults(func=cmd_layout)

    p_bench = sub.add_parser("bench", help="run the paired benchmark")
    p_bench.add_argument("--sizes", type=_parse_sizes, default=None,
                         help="comma-separated tree sizes"
                              f" (default {','.join(map(str, DESK_SIZES))})")
    p_bench.add_argument("--reps", type=int, default=None,
                         help=f"runs per size (default {DESK_REPS})")
    p_bench.add_argument("--seed", type=int, default=DEFAULT_SEED,
                         help="master seed (default %(default)s)")
    p_bench.add_argument("--canvas", type=_parse_canvas,
                         default=_parse_canvas("1920x1080"))
    p_bench.add_argument("--out", default="bench-out",
                         help="output directory (default %(default)s)")
    p_bench.add_argument("--full", action="store_true",
                         help="use the full size matrix"
                              f" {','.join(map(str, FULL_SIZES))}"
                              f" at {FULL_REPS} reps")
    p_bench.add_argument("--no-plots", action="store_true",
                         help="skip the report figures")
    p_bench.set_defaults(func=cmd_bench)

    p_demo = sub.add_parser(
        "demo", help="walk the 6x4 fixture and emit side-by-side SVGs")
    p_demo.add_argument("--out", default="demo-out",
                        help="output directory (default %(default)s)")
    p_demo.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HierarchyError, LayoutError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
