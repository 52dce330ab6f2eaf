"""Direction-inverting variant of the squarified layout.

Row membership is decided exactly as in the classic algorithm.  But
before a row is fixed along the free region's smaller side, the same
row is priced along the bigger side; when that orientation lands
strictly closer to square, the drawing direction flips for this row.
Every other row re-derives its direction from the region it lands in,
so a flip's lasting effect is the reshaped free region it leaves behind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .geometry import (Direction, Region, bigger_side, natural_direction,
                       smaller_side)
from .hierarchy import HierarchyNode
from .layout import LayoutResult, _run_layout, layoutrow, worst


def improve(actual_ar: float, alternative_ar: float) -> bool:
    """True when the alternative orientation is strictly closer to square.

    Both arguments are worst aspect ratios (>= 1); the test is on the
    distance from 1.  A perfectly square alternative beats anything that
    is not itself square; equal distances keep the current direction.
    """
    if alternative_ar == 1.0:
        return actual_ar > 1.0
    return abs(actual_ar - 1.0) / abs(alternative_ar - 1.0) > 1.0


@dataclass(frozen=True)
class RowDecision:
    """One fixed row: the orientation comparison and its outcome.

    region is the free region the row was fixed into; direction is the
    final drawing direction (after any inversion).
    """

    areas: tuple[float, ...]
    region: Region
    actual_ar: float
    alternative_ar: float
    inverted: bool
    direction: Direction


def layout_plus(tree: HierarchyNode, canvas: Region,
                improve_fn: Callable[[float, float], bool] = improve,
                trace: list[RowDecision] | None = None) -> LayoutResult:
    """Squarified layout with per-row direction inversion.

    improve_fn replaces the switching predicate (a constant False
    reproduces the classic layout bit for bit).  trace, when given,
    collects a RowDecision per fixed row in fix order.
    """
    def factory(placements):
        def fix_row(row, free):
            areas = [area for _, area in row]
            actual = worst(areas, smaller_side(free))
            alternative = worst(areas, bigger_side(free))
            direction = natural_direction(free)
            inverted = bool(improve_fn(actual, alternative))
            if inverted:
                direction = direction.inverted()
                # the switch must never pick the worse orientation
                assert alternative <= actual
            rects, leftover = layoutrow(areas, free, direction)
            for (item_path, _), rect in zip(row, rects):
                placements[item_path] = rect
            if trace is not None:
                trace.append(RowDecision(
                    areas=tuple(areas), region=free, actual_ar=actual,
                    alternative_ar=alternative, inverted=inverted,
                    direction=direction))
            return leftover
        return fix_row

    return _run_layout(tree, canvas, factory)
