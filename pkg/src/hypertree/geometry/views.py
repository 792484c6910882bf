"""Axis symmetries, hidden-part removal and parallel projection."""

from __future__ import annotations

from typing import Sequence

from ..boolean import apply, assert_tree, union_any
from ..core import BLACK, WHITE, Tree, union_subtrees

__all__ = ["symmetry_tree", "remove_hidden", "project"]


def _check_axis(axis, k):
    if not 0 <= axis < k:
        raise ValueError(f"axis {axis} out of range for k={k}")


def symmetry_tree(t: Tree, flags: Sequence[bool], k: int, r: int) -> Tree:
    """Mirror ``t`` across the mid-plane of every flagged axis."""
    if len(flags) != k:
        raise ValueError(f"need {k} symmetry flags")
    flags = [bool(f) for f in flags]
    depth = k * r

    def rec(node, level):
        if node.left is None:
            return node if node.annotation is None else (BLACK if node.black else WHITE)
        if level == depth:
            return BLACK
        a = rec(node.left, level + 1)
        b = rec(node.right, level + 1)
        return union_subtrees(b, a) if flags[level % k] else union_subtrees(a, b)

    return rec(t, 0)


def remove_hidden(t: Tree, axis: int, k: int, r: int) -> Tree:
    """Keep, on every line parallel to ``axis``, only the first black cell.

    "First" means lowest coordinate along ``axis``: the viewer looks from
    below.
    """
    _check_axis(axis, k)
    depth = k * r

    def front(level):
        # Lowest layer along `axis` of a full block rooted at `level`.
        if all((lv % k) != axis for lv in range(level, depth)):
            return BLACK
        if level % k == axis:
            return union_subtrees(front(level + 1), WHITE)
        sub = front(level + 1)
        return union_subtrees(sub, sub)

    def shadow(node, level):
        # Cylinder along `axis` spanned by the black part of `node`.
        if node.left is None:
            return node
        a = shadow(node.left, level + 1)
        b = shadow(node.right, level + 1)
        if level % k == axis:
            u = union_any(a, b)
            return union_subtrees(u, u)
        return union_subtrees(a, b)

    def visible(node, level):
        if node.left is None:
            return front(level) if node.black else WHITE
        a = visible(node.left, level + 1)
        b = visible(node.right, level + 1)
        if level % k == axis and not b.white:
            b = apply("diff", b, shadow(node.left, level + 1), k, r, level + 1)
        return union_subtrees(a, b)

    return visible(assert_tree(t, k, r), 0)


def project(t: Tree, view_axis: int, k: int, r: int) -> Tree:
    """Parallel projection along ``view_axis``: a ``(k-1)``-dimensional tree."""
    _check_axis(view_axis, k)
    depth = k * r

    def rec(node, level):
        if node.left is None:
            return BLACK if node.black else WHITE
        if level == depth:
            return BLACK
        a = rec(node.left, level + 1)
        b = rec(node.right, level + 1)
        if level % k == view_axis:
            return union_any(a, b)
        return union_subtrees(a, b)

    return rec(t, 0)
