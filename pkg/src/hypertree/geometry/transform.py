"""Homographic (projective) transformation of trees.

The output tree is produced cell by cell: for every output cell we know the
preimage of that cell under the map, a convex polytope obtained by
butterfly-splitting the preimage of the unit cube.  Source blocks are
scattered into the output by descending the output tree while the preimage
piece still meets the block.
"""

from __future__ import annotations

import numpy as np

from ..boolean import assert_tree
from ..core import BLACK, WHITE, Color, Tree, union_subtrees
from .polytope import (
    EPS_GEOM,
    Polytope,
    intersect_convex,
    polytope_tree,
    split_polytope,
    unit_polytope,
)

__all__ = [
    "transform_polytope_of",
    "homographic_transform",
    "homographic_transform_fast",
    "affine_matrix",
]


def affine_matrix(linear, offset) -> np.ndarray:
    """Homogeneous ``(k+1) x (k+1)`` matrix of ``x -> linear @ x + offset``."""
    linear = np.asarray(linear, dtype=float)
    k = linear.shape[0]
    m = np.eye(k + 1)
    m[:k, :k] = linear
    m[:k, k] = np.asarray(offset, dtype=float)
    return m


def _check_matrix(m, k):
    m = np.asarray(m, dtype=float)
    if m.shape != (k + 1, k + 1):
        raise ValueError(f"transform must be {(k + 1, k + 1)}, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("transform has non-finite entries")
    return m


def transform_polytope_of(m, k: int) -> Polytope:
    """Preimage of the unit cube under the homography ``m``.

    Vertices are ``m^-1`` applied to the cube corners; the faces are the
    rows of ``m`` expressing ``y_i >= 0`` and ``y_i <= 1`` in source
    coordinates.
    """
    m = _check_matrix(m, k)
    try:
        inv = np.linalg.inv(m)
    except np.linalg.LinAlgError:
        raise ValueError("singular transform") from None
    corners = unit_polytope(k).homogeneous()
    h = corners @ inv.T
    w = h[:, k]
    if np.any(np.abs(w) < EPS_GEOM):
        raise ValueError("transform sends a cube corner to infinity")
    if np.all(w < 0):
        sign = -1.0
    elif np.all(w > 0):
        sign = 1.0
    else:
        raise ValueError("preimage of the unit cube is not bounded")
    verts = h[:, :k] / w[:, None]
    lower = sign * m[:k].copy()
    upper = sign * (m[:k] - m[k][None, :])
    weights = np.abs(w)
    if np.all(weights == weights[0]):
        weights = None
    return Polytope(verts, lower, upper, weights)


def _analyze(source, p, k, r_analysis, visit):
    """Call ``visit(block)`` for each source block worth scattering."""
    poly = polytope_tree(p, k, r_analysis)
    depth = k * r_analysis

    def rec(src, pnode, block, level):
        if src.white or pnode.white:
            return
        if level == depth or (src.left is None and pnode.left is None):
            visit(block)
            return
        left, right = split_polytope(block, level % k)
        rec(src.son(0), pnode.son(0), left, level + 1)
        rec(src.son(1), pnode.son(1), right, level + 1)

    rec(source, poly, unit_polytope(k), 0)


def homographic_transform(t: Tree, m, k: int, r_analysis: int, r_build: int) -> Tree:
    """Image of ``t`` under the homography ``m`` (upper hull at ``r_build``)."""
    p = transform_polytope_of(m, k)
    depth = k * r_build
    state = {"out": WHITE}

    def scatter(node, piece, block, level):
        if node.left is None and node.black:
            return node
        meets, piece_in_block, _ = intersect_convex(piece, block)
        if not meets:
            return node
        if piece_in_block or level == depth:
            return BLACK
        left, right = split_polytope(piece, level % k)
        return union_subtrees(
            scatter(node.son(0), left, block, level + 1),
            scatter(node.son(1), right, block, level + 1),
        )

    def visit(block):
        state["out"] = scatter(state["out"], p, block, 0)

    _analyze(t, p, k, r_analysis, visit)
    return state["out"]


def homographic_transform_fast(t: Tree, m, k: int, r_analysis: int, r_build: int) -> Tree:
    """Same result as :func:`homographic_transform`.

    Preimage pieces are cached on the output nodes while blocks are
    scattered, so each split is computed once; the cache is dropped at the
    end.
    """
    p = transform_polytope_of(m, k)
    depth = k * r_build
    root = Tree(Color.WHITE, annotation=p)

    def scatter(node, block, level):
        if node.black:
            return
        piece = node.annotation
        meets, piece_in_block, _ = intersect_convex(piece, block)
        if not meets:
            return
        if piece_in_block or level == depth:
            node.color, node.left, node.right = Color.BLACK, None, None
            return
        if node.left is None:
            a, b = split_polytope(piece, level % k)
            node.color = None
            node.left = Tree(Color.WHITE, annotation=a)
            node.right = Tree(Color.WHITE, annotation=b)
        scatter(node.left, block, level + 1)
        scatter(node.right, block, level + 1)
        if node.left.black and node.right.black:
            node.color, node.left, node.right = Color.BLACK, None, None

    _analyze(t, p, k, r_analysis, lambda block: scatter(root, block, 0))
    return assert_tree(root, k, r_build)
