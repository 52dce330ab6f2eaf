"""Shared test helpers: random tree generation, tiling checks, and
independent metric recomputation from serialized coordinates."""

from __future__ import annotations

import itertools
import json
import math
import random

import numpy as np

from squaretile import HierarchyNode, LayoutResult, Region


def random_nested_tree(rng: random.Random, max_leaves: int = 200,
                       max_depth: int = 3) -> HierarchyNode:
    """A random weighted tree with 1..max_leaves leaves nested up to
    max_depth levels below the root.  Weights are uniform ints [1, 1e6].
    """
    ids = itertools.count()

    def build(n_leaves: int, depth: int) -> HierarchyNode:
        name = f"x{next(ids)}"
        if n_leaves == 1 or depth >= max_depth or rng.random() < 0.2:
            if n_leaves == 1:
                return HierarchyNode(name, weight=rng.randint(1, 1_000_000))
            # collapse the remaining budget into a flat bundle
            kids = [HierarchyNode(f"x{next(ids)}",
                                  weight=rng.randint(1, 1_000_000))
                    for _ in range(n_leaves)]
            return HierarchyNode(name, children=kids)
        k = rng.randint(2, min(8, n_leaves))
        cuts = sorted(rng.sample(range(1, n_leaves), k - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [n_leaves])]
        return HierarchyNode(name,
                             children=[build(p, depth + 1) for p in parts])

    total = rng.randint(1, max_leaves)
    if total == 1:
        return HierarchyNode("x", children=[
            HierarchyNode("x0", weight=rng.randint(1, 1_000_000))])
    return build(total, 0)


def max_pairwise_overlap(regions: list[Region]) -> float:
    """Largest pairwise intersection area among the regions (px^2)."""
    if len(regions) < 2:
        return 0.0
    x = np.array([r.x for r in regions])
    y = np.array([r.y for r in regions])
    right = np.array([r.right for r in regions])
    bottom = np.array([r.bottom for r in regions])
    ow = np.minimum(right[:, None], right[None, :]) - np.maximum(
        x[:, None], x[None, :])
    oh = np.minimum(bottom[:, None], bottom[None, :]) - np.maximum(
        y[:, None], y[None, :])
    overlap = np.clip(ow, 0.0, None) * np.clip(oh, 0.0, None)
    np.fill_diagonal(overlap, 0.0)
    return float(overlap.max())


def check_tiling(layout: LayoutResult, *, overlap_tol: float = 1e-6,
                 area_rel_tol: float = 1e-6,
                 contain_tol: float = 1e-6) -> None:
    """Assert interior-disjointness, area conservation, and containment."""
    leaves = [region for _, _, region in layout.leaves()]
    overlap = max_pairwise_overlap(leaves)
    assert overlap <= overlap_tol, f"leaf overlap {overlap} px^2"

    leaf_area = math.fsum(r.area for r in leaves)
    canvas_area = layout.canvas.area
    assert math.isclose(leaf_area, canvas_area, rel_tol=area_rel_tol), (
        f"leaf areas sum to {leaf_area}, canvas is {canvas_area}")

    for path, node, _, region in layout.walk():
        for child in node.children:
            child_region = layout.placements[f"{path}/{child.name}"]
            assert child_region.x >= region.x - contain_tol
            assert child_region.y >= region.y - contain_tol
            assert child_region.right <= region.right + contain_tol
            assert child_region.bottom <= region.bottom + contain_tol


def serialize_placements(layout: LayoutResult) -> str:
    """Leaf coordinates and weights as a JSON document."""
    doc = [
        {"path": path, "weight": node.weight, "x": region.x, "y": region.y,
         "w": region.width, "h": region.height}
        for path, node, region in layout.leaves()
    ]
    return json.dumps(doc)


def brute_force_metrics(serialized: str) -> tuple[float, float, float]:
    """(mean, weighted mean, corrected std dev) of aspect ratios,
    recomputed from serialized coordinates with plain arithmetic."""
    rows = json.loads(serialized)
    ars = []
    weights = []
    for row in rows:
        w, h = row["w"], row["h"]
        ars.append(w / h if w >= h else h / w)
        weights.append(row["weight"])
    n = len(ars)
    mean = sum(ars) / n
    weighted = sum(a * w for a, w in zip(ars, weights)) / sum(weights)
    if n == 1:
        std = 0.0
    else:
        std = math.sqrt(sum((a - mean) ** 2 for a in ars) / (n - 1))
    return mean, weighted, std
