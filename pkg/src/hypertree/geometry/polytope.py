"""Convex k-polytopes with 2^k vertices and k pairs of opposite faces.

Vertices are stored in butterfly order: bit ``j`` of a vertex index says
whether the vertex sits on the lower (0) or upper (1) face of axis ``j``.
Splitting along axis ``a`` therefore pairs vertices ``i`` and ``i + 2**a``.

Faces are covectors ``h`` of length ``k + 1``; the half-space of a lower
face is ``h . (x, 1) >= 0`` and that of an upper face is ``h . (x, 1) <= 0``.

Vertices may carry homogeneous weights.  Under a projective map the image
of an edge midpoint is the weighted mean of the end points, so splits keep
the exact preimage of a dyadic block rather than an affine approximation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import BLACK, WHITE, Tree, union_subtrees

__all__ = [
    "EPS_GEOM",
    "Polytope",
    "unit_polytope",
    "box_polytope",
    "position_vs_hyperplane",
    "intersect_convex",
    "split_vertices",
    "split_faces",
    "split_polytope",
    "polytope_tree",
]

EPS_GEOM = 2.0**-40


@dataclass
class Polytope:
    vertices: np.ndarray  # (2^k, k)
    lower: np.ndarray  # (k, k+1)
    upper: np.ndarray  # (k, k+1)
    weights: np.ndarray | None = None  # (2^k,), homogeneous vertex weights

    @property
    def dims(self) -> int:
        return self.vertices.shape[1]

    def homogeneous(self) -> np.ndarray:
        v = self.vertices
        return np.hstack([v, np.ones((v.shape[0], 1))])

    def faces(self) -> np.ndarray:
        return np.vstack([self.lower, self.upper])


def _corners(k):
    idx = np.arange(1 << k)
    return ((idx[:, None] >> np.arange(k)[None, :]) & 1).astype(float)


def unit_polytope(k: int) -> Polytope:
    eye = np.eye(k, k + 1)
    upper = eye.copy()
    upper[:, k] = -1.0
    return Polytope(_corners(k), eye, upper)


def box_polytope(lo, hi) -> Polytope:
    """Axis-aligned box ``[lo, hi]``."""
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    k = lo.size
    verts = lo + _corners(k) * (hi - lo)
    lower = np.eye(k, k + 1)
    lower[:, k] = -lo
    upper = np.eye(k, k + 1)
    upper[:, k] = -hi
    return Polytope(verts, lower, upper)


def position_vs_hyperplane(p: Polytope, h) -> tuple:
    """``(all_on, all_nonpos, all_nonneg)`` for the vertices of ``p`` against ``h``."""
    vals = p.homogeneous() @ np.asarray(h, dtype=float)
    return (
        bool(np.all(np.abs(vals) <= EPS_GEOM)),
        bool(np.all(vals <= EPS_GEOM)),
        bool(np.all(vals >= -EPS_GEOM)),
    )


def _against(verts_h, lower, upper):
    """Intersection and inclusion flags of a vertex set against a face set.

    A face on which every vertex lies is ignored.  Vertices merely touching
    the boundary from outside do not count as intersecting.
    """
    lo = verts_h @ lower.T
    up = verts_h @ upper.T
    lo_on = np.all(np.abs(lo) <= EPS_GEOM, axis=0)
    up_on = np.all(np.abs(up) <= EPS_GEOM, axis=0)
    lo_neg = np.any(lo < -EPS_GEOM, axis=0) & ~lo_on
    up_pos = np.any(up > EPS_GEOM, axis=0) & ~up_on
    lo_out = np.all(lo <= EPS_GEOM, axis=0) & ~lo_on
    up_out = np.all(up >= -EPS_GEOM, axis=0) & ~up_on
    inside = not (lo_neg.any() or up_pos.any())
    meets = not (lo_out.any() or up_out.any())
    return meets, inside


def intersect_convex(p1: Polytope, p2: Polytope) -> tuple:
    """``(intersects, p1_in_p2, p2_in_p1)``.

    Disjointness is detected with the faces of either polytope as separating
    planes, the test used to rasterize blocks.  Inclusions are reported only
    for intersecting pairs.
    """
    meets_a, p2_in_p1 = _against(p2.homogeneous(), p1.lower, p1.upper)
    meets_b, p1_in_p2 = _against(p1.homogeneous(), p2.lower, p2.upper)
    if not (meets_a and meets_b):
        return False, False, False
    return True, p1_in_p2, p2_in_p1


def split_vertices(vertices, axis: int, weights=None):
    """Butterfly split of a vertex array along ``axis`` (0-based).

    Returns ``(left_vertices, right_vertices, left_weights, right_weights)``;
    weights are ``None`` when none were given.
    """
    n, k = vertices.shape
    if not 0 <= axis < k:
        raise ValueError(f"axis {axis} out of range for k={k}")
    stride = 1 << axis
    lo = np.array([i for i in range(n) if not i & stride])
    hi = lo + stride
    if weights is None:
        mid = (vertices[lo] + vertices[hi]) / 2.0
        wmid = None
    else:
        wl, wh = weights[lo], weights[hi]
        mid = (wl[:, None] * vertices[lo] + wh[:, None] * vertices[hi]) / (wl + wh)[:, None]
        wmid = (wl + wh) / 2.0
    left = vertices.copy()
    right = vertices.copy()
    left[hi] = mid
    right[lo] = mid
    if weights is None:
        return left, right, None, None
    lw = weights.copy()
    rw = weights.copy()
    lw[hi] = wmid
    rw[lo] = wmid
    return left, right, lw, rw


def split_faces(lower, upper, axis: int):
    """Median face along ``axis``: left keeps lower faces, right keeps upper faces."""
    median = (lower[axis] + upper[axis]) / 2.0
    left_upper = upper.copy()
    left_upper[axis] = median
    right_lower = lower.copy()
    right_lower[axis] = median
    return (lower, left_upper), (right_lower, upper)


def split_polytope(p: Polytope, axis: int):
    lv, rv, lw, rw = split_vertices(p.vertices, axis, p.weights)
    (ll, lu), (rl, ru) = split_faces(p.lower, p.upper, axis)
    return Polytope(lv, ll, lu, lw), Polytope(rv, rl, ru, rw)


def polytope_tree(p: Polytope, k: int, r: int) -> Tree:
    """Tree of the cells of ``[0, 1)^k`` meeting ``p``, at precision ``r``."""
    if p.dims != k:
        raise ValueError("polytope dimension does not match k")
    depth = k * r

    def rec(block, level):
        meets, block_in_p, _ = intersect_convex(block, p)
        if not meets:
            return WHITE
        if block_in_p or level == depth:
            return BLACK
        left, right = split_polytope(block, level % k)
        return union_subtrees(rec(left, level + 1), rec(right, level + 1))

    return rec(unit_polytope(k), 0)
