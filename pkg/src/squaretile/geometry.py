"""Axis-aligned rectangle arithmetic shared by the tiling algorithms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Direction(Enum):
    """Orientation of the strip a row of items occupies.

    TOP_TO_BOTTOM is a vertical strip spanning the region's full height,
    flush with the left edge; items stack downward.  LEFT_TO_RIGHT is a
    horizontal strip spanning the full width, flush with the top edge;
    items run rightward.
    """

    TOP_TO_BOTTOM = "top-to-bottom"
    LEFT_TO_RIGHT = "left-to-right"

    def inverted(self) -> "Direction":
        if self is Direction.TOP_TO_BOTTOM:
            return Direction.LEFT_TO_RIGHT
        return Direction.TOP_TO_BOTTOM


@dataclass(frozen=True, slots=True)
class Region:
    """Axis-aligned rectangle: top-left corner plus non-negative extents."""

    x: float
    y: float
    width: float
    height: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)
                and math.isfinite(self.width) and math.isfinite(self.height)):
            raise ValueError(f"region must be finite: {self!r}")
        if self.width < 0 or self.height < 0:
            raise ValueError(f"region extents must be >= 0: {self!r}")

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def right(self) -> float:
        return self.x + self.width

    @property
    def bottom(self) -> float:
        return self.y + self.height


def aspect_ratio(r: Region) -> float:
    """Longer side over shorter side, always >= 1.

    A degenerate rectangle (zero width or height) is not measurable and
    yields inf, which poisons any downstream max/mean visibly instead of
    hiding the problem.
    """
    if r.width <= 0 or r.height <= 0:
        return math.inf
    if r.width >= r.height:
        return r.width / r.height
    return r.height / r.width


def smaller_side(r: Region) -> float:
    return min(r.width, r.height)


def bigger_side(r: Region) -> float:
    return max(r.width, r.height)


def natural_direction(r: Region) -> Direction:
    """Direction that lays a row along the region's smaller side.

    Square regions resolve to TOP_TO_BOTTOM so layouts stay deterministic.
    """
    if r.height <= r.width:
        return Direction.TOP_TO_BOTTOM
    return Direction.LEFT_TO_RIGHT


def transpose(r: Region) -> Region:
    """Swap the extents in place; aspect_ratio is invariant under this."""
    return Region(r.x, r.y, r.height, r.width)


def shrink(r: Region, direction: Direction, thickness: float) -> Region:
    """Remove the strip a fixed row occupies and return the leftover region.

    thickness may overshoot the available extent by floating-point noise
    (up to 1e-6 relative, reached only by a level's final row); larger
    overshoots raise ValueError.
    """
    if thickness < 0:
        raise ValueError(f"thickness must be >= 0, got {thickness}")
    extent = r.width if direction is Direction.TOP_TO_BOTTOM else r.height
    if thickness > extent:
        if thickness - extent > 1e-6 * max(extent, thickness):
            raise ValueError(
                f"row thickness {thickness} exceeds available extent {extent}")
        thickness = extent
    if direction is Direction.TOP_TO_BOTTOM:
        return Region(r.x + thickness, r.y, r.width - thickness, r.height)
    return Region(r.x, r.y + thickness, r.width, r.height - thickness)
