"""Slice extraction and insertion across a subset of axes.

A mask of length ``k`` selects ``c`` fixed axes.  The coordinate tree lives
in the ``c``-dimensional space of fixed axes, the slice tree in the
``(k - c)``-dimensional space of free axes; both keep the original axis
order, so their levels interleave with the big tree's levels without
renumbering.
"""

from __future__ import annotations

from typing import Sequence

from .boolean import union_any
from .core import BLACK, WHITE, Tree, union_subtrees

__all__ = ["extract_slice", "insert_slice"]


def _check_mask(mask, k, c):
    if len(mask) != k:
        raise ValueError(f"mask needs {k} entries")
    if sum(bool(m) for m in mask) != c:
        raise ValueError(f"mask selects {sum(bool(m) for m in mask)} axes, expected {c}")


def extract_slice(space: Tree, k: int, coord: Tree, c: int, mask: Sequence[bool], r: int) -> Tree:
    """Union, over the fixed-axis cells black in ``coord``, of the free-axis
    sections of ``space``.  Returns a ``(k - c)``-dimensional tree."""
    _check_mask(mask, k, c)
    mask = [bool(m) for m in mask]
    depth = k * r

    def rec(sp, cd, level):
        if sp.white or cd.white:
            return WHITE
        if level == depth or (sp.left is None and cd.left is None):
            return BLACK
        if mask[level % k]:
            return union_any(rec(sp.son(0), cd.son(0), level + 1), rec(sp.son(1), cd.son(1), level + 1))
        return union_subtrees(rec(sp.son(0), cd, level + 1), rec(sp.son(1), cd, level + 1))

    return rec(space, coord, 0)


def insert_slice(
    space: Tree,
    slice_tree: Tree,
    d: int,
    coord: Tree,
    c: int,
    mask: Sequence[bool],
    r: int,
) -> Tree:
    """``space`` united with the cylinder {fixed axes in ``coord``} x {free axes
    in ``slice_tree``}.  ``d`` is the dimension of the slice, ``k = c + d``."""
    k = c + d
    _check_mask(mask, k, c)
    mask = [bool(m) for m in mask]
    depth = k * r

    def rec(sp, sl, cd, level):
        if sl.white or cd.white:
            return sp
        if sp.left is None and sp.black:
            return sp
        if level == depth or (sl.left is None and cd.left is None):
            return BLACK
        if mask[level % k]:
            left = rec(sp.son(0), sl, cd.son(0), level + 1)
            right = rec(sp.son(1), sl, cd.son(1), level + 1)
        else:
            left = rec(sp.son(0), sl.son(0), cd, level + 1)
            right = rec(sp.son(1), sl.son(1), cd, level + 1)
        return union_subtrees(left, right)

    return rec(space, slice_tree, coord, 0)
