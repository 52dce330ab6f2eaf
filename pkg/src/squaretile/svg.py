"""Minimal SVG emitter for layout inspection.

Emits only svg, rect, and text elements, in pre-order hierarchy order,
so the same layout always renders to the identical byte string.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .geometry import Region
from .layout import LayoutResult

# light-to-dark ramp used by both coloring schemes
_GRAYS = ("#f2f2f2", "#e4e4e4", "#d5d5d5", "#c6c6c6",
          "#b7b7b7", "#a8a8a8", "#999999", "#8a8a8a")

_MIN_LABEL_PX = 4.0


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 1.0
    stroke_width: float = 1.0
    label: bool = False
    color_by: str = "weight-bucket"  # "weight-bucket" | "depth" | "none"
    nest_inset: float = 0.0

    def validate(self) -> None:
        if self.scale <= 0:
            raise ValueError(f"scale must be > 0, got {self.scale}")
        if self.stroke_width < 0 or self.nest_inset < 0:
            raise ValueError("stroke_width and nest_inset must be >= 0")
        if self.color_by not in ("weight-bucket", "depth", "none"):
            raise ValueError(f"unknown color_by {self.color_by!r}")


def _num(value: float) -> str:
    return format(value, ".12g")


def _bucket_fill(weight: float, max_weight: float) -> str:
    if max_weight <= 0:
        return _GRAYS[0]
    share = min(max(weight / max_weight, 0.0), 1.0)
    return _GRAYS[round(share * (len(_GRAYS) - 1))]


def to_svg(layout: LayoutResult, options: RenderOptions | None = None) -> str:
    """Render the layout to an SVG 1.1 document string."""
    opts = options or RenderOptions()
    opts.validate()
    scale = opts.scale
    canvas = layout.canvas
    root_weight = layout.tree.total_weight()

    parts = []
    parts.append(
        '<svg xmlns="http://www.w3.org/2000/svg"'
        f' width="{_num(canvas.width * scale)}"'
        f' height="{_num(canvas.height * scale)}"'
        f' viewBox="{_num(canvas.x * scale)} {_num(canvas.y * scale)}'
        f' {_num(canvas.width * scale)} {_num(canvas.height * scale)}">')

    for path, node, depth, region in layout.walk():
        inset = opts.nest_inset * depth
        x = region.x * scale + inset
        y = region.y * scale + inset
        w = max(region.width * scale - 2 * inset, 0.0)
        h = max(region.height * scale - 2 * inset, 0.0)
        if opts.color_by == "depth":
            fill = _GRAYS[depth % len(_GRAYS)]
        elif opts.color_by == "weight-bucket":
            fill = _bucket_fill(node.total_weight(), root_weight)
        else:
            fill = "none"
        parts.append(
            f'<rect x="{_num(x)}" y="{_num(y)}"'
            f' width="{_num(w)}" height="{_num(h)}"'
            f' fill="{fill}" stroke="#000000"'
            f' stroke-width="{_num(opts.stroke_width)}"/>')
        if opts.label:
            font = min(w, h) * 0.18
            if font >= _MIN_LABEL_PX:
                if node.is_leaf:
                    text = f"{node.name} ({format(node.weight, 'g')})"
                else:
                    text = node.name
                parts.append(
                    f'<text x="{_num(x + w / 2)}" y="{_num(y + h / 2)}"'
                    f' font-size="{_num(font)}" text-anchor="middle"'
                    ' dominant-baseline="middle" font-family="sans-serif">'
                    f'{escape(text)}</text>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
