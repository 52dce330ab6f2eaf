"""Weighted named trees: the input model for every layout."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class HierarchyError(ValueError):
    """Invalid tree input; the message names the offending node path."""


@dataclass
class HierarchyNode:
    """A named node.  Leaves carry a positive weight, internal nodes carry
    children; an internal node's weight is always derived, never stored."""

    name: str
    weight: float | None = None
    children: list["HierarchyNode"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def total_weight(self) -> float:
        """Leaf weight, or the recursive sum over children.

        Assumes a validated tree (see validate_tree).
        """
        if self.is_leaf:
            return float(self.weight)
        return math.fsum(c.total_weight() for c in self.children)


def _check_name(name, path):
    if not isinstance(name, str) or not name:
        raise HierarchyError(f"{path}: node name must be a non-empty string")
    if "/" in name:
        raise HierarchyError(
            f"{path}: node name {name!r} must not contain '/'"
            " (names form slash-joined paths)")


def _is_real(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def validate_tree(root: HierarchyNode) -> None:
    """Raise HierarchyError unless the tree is well formed.

    Rules: names are non-empty and slash-free, sibling names are unique,
    leaves carry a finite weight > 0, internal nodes carry no stored weight.
    """
    def visit(node, path):
        _check_name(node.name, path)
        if node.is_leaf:
            if node.weight is None:
                raise HierarchyError(f"{path}: leaf is missing a weight")
            if not _is_real(node.weight) or not math.isfinite(node.weight):
                raise HierarchyError(
                    f"{path}: leaf weight must be a finite number,"
                    f" got {node.weight!r}")
            if node.weight <= 0:
                raise HierarchyError(
                    f"{path}: leaf weight must be > 0, got {node.weight!r}")
            return
        if node.weight is not None:
            raise HierarchyError(
                f"{path}: internal node must not store a weight"
                " (it is derived from the children)")
        seen = set()
        for child in node.children:
            if not isinstance(child, HierarchyNode):
                raise HierarchyError(f"{path}: children must be nodes")
            if child.name in seen:
                raise HierarchyError(
                    f"{path}: duplicate child name {child.name!r}")
            seen.add(child.name)
            visit(child, f"{path}/{child.name}")

    _check_name(root.name, "(root)")
    visit(root, root.name)


def parse_hierarchy(doc) -> HierarchyNode:
    """Build a tree from a plain JSON-style document.

    Each node object has a "name", and exactly one of "weight" (> 0, leaves)
    or "children" (non-empty array).  Unknown keys are ignored.
    """
    def build(obj, parent_path):
        where = parent_path or "(root)"
        if not isinstance(obj, dict):
            raise HierarchyError(f"{where}: node must be an object, got"
                                 f" {type(obj).__name__}")
        name = obj.get("name")
        _check_name(name, where)
        here = f"{parent_path}/{name}" if parent_path else name
        has_weight = "weight" in obj
        has_children = "children" in obj
        if has_weight == has_children:
            raise HierarchyError(
                f"{here}: node must have exactly one of weight or children")
        if has_weight:
            weight = obj["weight"]
            if not _is_real(weight) or not math.isfinite(weight) or weight <= 0:
                raise HierarchyError(
                    f"{here}: weight must be a finite number > 0,"
                    f" got {weight!r}")
            return HierarchyNode(name, weight=weight)
        children = obj["children"]
        if not isinstance(children, list) or not children:
            raise HierarchyError(f"{here}: children must be a non-empty array")
        return HierarchyNode(name, children=[build(c, here) for c in children])

    root = build(doc, "")
    validate_tree(root)
    return root
