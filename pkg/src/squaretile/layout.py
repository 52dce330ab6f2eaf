"""Greedy row-packed treemap layout.

Items are laid out row by row along the smaller side of the remaining
free region; a row keeps absorbing the next (smaller) item as long as
that does not worsen the row's worst aspect ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .geometry import Direction, Region, natural_direction, shrink, smaller_side
from .hierarchy import HierarchyNode, validate_tree


class LayoutError(ValueError):
    """Unusable layout input (degenerate canvas, bad weights, bad row)."""


def normalize_areas(weights: Sequence[float], region: Region) -> list[float]:
    """Scale weights proportionally so they sum to the region's area."""
    if not weights:
        return []
    if region.width <= 0 or region.height <= 0:
        raise LayoutError(
            f"cannot normalize into a degenerate region {region!r}")
    for w in weights:
        if not (w > 0) or not math.isfinite(w):
            raise LayoutError(f"weights must be finite and > 0, got {w!r}")
    scale = region.area / math.fsum(weights)
    return [w * scale for w in weights]


def worst(row_areas: Sequence[float], strip_length: float) -> float:
    """Worst aspect ratio in a row laid along a side of the given length.

    An empty row yields +inf, so any first item is an improvement.
    """
    if not row_areas:
        return math.inf
    if strip_length <= 0:
        raise LayoutError(f"strip length must be > 0, got {strip_length}")
    total = math.fsum(row_areas)
    return _worst(total, max(row_areas), min(row_areas), strip_length)


def _worst(total, biggest, smallest, strip_length):
    w2 = strip_length * strip_length
    s2 = total * total
    return max(w2 * biggest / s2, s2 / (w2 * smallest))


def layoutrow(row_areas: Sequence[float], region: Region,
              direction: Direction) -> tuple[list[Region], Region]:
    """Fix one row of areas inside the region along the given direction.

    Returns the item rectangles in row order plus the leftover region.
    The strip spans the region side named by the direction; its thickness
    is whatever makes the areas come out exactly.
    """
    if not row_areas:
        raise LayoutError("cannot lay out an empty row")
    length = (region.height if direction is Direction.TOP_TO_BOTTOM
              else region.width)
    if length <= 0:
        raise LayoutError(f"cannot lay a row into a degenerate {region!r}")
    thickness = math.fsum(row_areas) / length
    leftover = shrink(region, direction, thickness)
    rects = []
    if direction is Direction.TOP_TO_BOTTOM:
        cursor = region.y
        for area in row_areas:
            extent = area / thickness
            rects.append(Region(region.x, cursor, thickness, extent))
            cursor += extent
    else:
        cursor = region.x
        for area in row_areas:
            extent = area / thickness
            rects.append(Region(cursor, region.y, extent, thickness))
            cursor += extent
    return rects, leftover


# A fixer receives one row of (path, area) items plus the current free
# region, places the row, and returns the shrunken free region.
RowFixer = Callable[[list[tuple[str, float]], Region], Region]


def _pack_level(items: list[tuple[str, float]], region: Region,
                fix_row: RowFixer) -> None:
    """Split items (sorted by non-increasing area) into rows and fix them.

    A row absorbs the next item while that does not raise the row's worst
    aspect ratio at the strip length chosen when the row was started; an
    equal worst admits the item.
    """
    free = region
    i = 0
    n = len(items)
    while i < n:
        length = smaller_side(free)
        if length <= 0:
            raise LayoutError(
                f"free region {free!r} exhausted with {n - i} items left")
        first = items[i][1]
        row = [items[i]]
        row_sum = first
        row_max = first
        current = _worst(row_sum, row_max, first, length)
        i += 1
        while i < n:
            # items are sorted, so a new item is the row minimum
            area = items[i][1]
            candidate = _worst(row_sum + area, row_max, area, length)
            if candidate <= current:
                row.append(items[i])
                row_sum += area
                current = candidate
                i += 1
            else:
                break
        free = fix_row(row, free)


def _tile(node: HierarchyNode, path: str, region: Region,
          placements: dict[str, Region], fix_row: RowFixer) -> None:
    if node.is_leaf:
        return
    weights = [child.total_weight() for child in node.children]
    areas = normalize_areas(weights, region)
    items = [(f"{path}/{child.name}", area)
             for child, area in zip(node.children, areas)]
    items.sort(key=lambda item: item[1], reverse=True)  # stable: ties keep input order
    _pack_level(items, region, fix_row)
    for child in node.children:
        child_path = f"{path}/{child.name}"
        _tile(child, child_path, placements[child_path], placements, fix_row)


def _run_layout(tree: HierarchyNode, canvas: Region,
                fixer_factory) -> "LayoutResult":
    validate_tree(tree)
    if canvas.width <= 0 or canvas.height <= 0:
        raise LayoutError(f"canvas must have positive extents, got {canvas!r}")
    placements: dict[str, Region] = {tree.name: canvas}
    _tile(tree, tree.name, canvas, placements, fixer_factory(placements))
    return LayoutResult(tree=tree, canvas=canvas, placements=placements)


def layout_squarified(tree: HierarchyNode, canvas: Region) -> "LayoutResult":
    """Classic squarified layout: every row runs along the free region's
    smaller side."""
    def factory(placements):
        def fix_row(row, free):
            rects, leftover = layoutrow(
                [area for _, area in row], free, natural_direction(free))
            for (item_path, _), rect in zip(row, rects):
                placements[item_path] = rect
            return leftover
        return fix_row

    return _run_layout(tree, canvas, factory)


@dataclass
class LayoutResult:
    """A finished layout: the tree, the canvas, and one region per node,
    keyed by the slash-joined name path from the root."""

    tree: HierarchyNode
    canvas: Region
    placements: dict[str, Region]

    def walk(self) -> Iterator[tuple[str, HierarchyNode, int, Region]]:
        """Pre-order traversal yielding (path, node, depth, region)."""
        def visit(node, path, depth):
            yield path, node, depth, self.placements[path]
            for child in node.children:
                yield from visit(child, f"{path}/{child.name}", depth + 1)

        yield from visit(self.tree, self.tree.name, 0)

    def leaves(self) -> Iterator[tuple[str, HierarchyNode, Region]]:
        for path, node, _, region in self.walk():
            if node.is_leaf:
                yield path, node, region
