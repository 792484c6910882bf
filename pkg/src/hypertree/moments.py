"""Geometric moments up to order 3, centering, principal-axis frames and Eigen trees.

Moment keys are sorted axis triples ``(i, j, m)`` with axes numbered from 1
and 0 meaning "unused": ``(0, 0, 0)`` is the mass, ``(2, 0, 0)`` is the
first moment along axis 2, ``(1, 1, 3)`` is the integral of ``x1^2 x3``.
Function arguments that name an axis directly (split axes, view axes) are
0-based like everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from .core import Tree
from .geometry.transform import affine_matrix, homographic_transform, homographic_transform_fast
from .geometry.views import symmetry_tree
from .linalg import jacobi_eigh

__all__ = [
    "EPS_MASS",
    "EPS_NUM",
    "MomentList",
    "CenteredMoments",
    "EigenFrame",
    "moment_keys",
    "unit_moments",
    "child_moments",
    "tree_moments",
    "block_moments",
    "center_moments",
    "normalize_moments",
    "frame_matrix",
    "eigen_tree",
    "eigen_tree_of",
    "SCALE_POLICIES",
]

EPS_MASS = 1e-15
EPS_NUM = 1e-9
SCALE_POLICIES = ("sqrt", "linear", "annex")


@lru_cache(maxsize=None)
def moment_keys(k: int) -> tuple:
    keys = [(0, 0, 0)]
    for order in (1, 2, 3):
        for combo in combinations_with_replacement(range(1, k + 1), order):
            keys.append(tuple(combo) + (0,) * (3 - order))
    return tuple(keys)


@lru_cache(maxsize=None)
def _key_index(k: int) -> dict:
    return {key: i for i, key in enumerate(moment_keys(k))}


def _exponents(key, k):
    e = [0] * k
    for a in key:
        if a:
            e[a - 1] += 1
    return e


def _key_of(exps):
    axes = [a + 1 for a, n in enumerate(exps) for _ in range(n)]
    return tuple(axes) + (0,) * (3 - len(axes))


def _canonical_key(key):
    axes = sorted(a for a in key if a)
    return tuple(axes) + (0,) * (3 - len(axes))


class MomentList:
    """Moments of orders 0-3 of a region, indexed by sorted axis triples."""

    __slots__ = ("k", "values")

    def __init__(self, k: int, values=None):
        self.k = k
        n = len(moment_keys(k))
        self.values = np.zeros(n) if values is None else np.asarray(values, dtype=float)
        if self.values.shape != (n,):
            raise ValueError(f"expected {n} moment values")

    def __getitem__(self, key):
        return float(self.values[_key_index(self.k)[_canonical_key(key)]])

    def keys(self):
        return moment_keys(self.k)

    def items(self):
        return zip(moment_keys(self.k), self.values.tolist())

    def to_dict(self) -> dict:
        return dict(self.items())

    def __add__(self, other):
        if other.k != self.k:
            raise ValueError("dimension mismatch")
        return MomentList(self.k, self.values + other.values)

    def __repr__(self):
        return f"MomentList(k={self.k}, mass={self.values[0]!r})"


def unit_moments(k: int) -> MomentList:
    """Moments of the full unit cube: product of ``1 / (e + 1)`` over axes."""
    vals = [np.prod([1.0 / (e + 1) for e in _exponents(key, k)]) for key in moment_keys(k)]
    return MomentList(k, vals)


@lru_cache(maxsize=None)
def _child_operators(k: int, axis: int):
    """Matrices ``A_e`` such that a half-block's moments are ``sum_e x^e A_e @ parent``.

    For a block halved along ``axis`` toward the coordinate ``x`` (its
    minimum for the left half, its maximum for the right half), the half is
    the image of the block under ``y = (x_axis + x) / 2`` with Jacobian 1/2,
    so ``M'(y^n Q) = sum_p C(n, p) x^(n-p) / 2^(n+1) M(x^p Q)``.
    """
    keys = moment_keys(k)
    index = _key_index(k)
    ops = np.zeros((4, len(keys), len(keys)))
    for row, key in enumerate(keys):
        exps = _exponents(key, k)
        n = exps[axis]
        for p in range(n + 1):
            src = list(exps)
            src[axis] = p
            ops[n - p, row, index[_key_of(src)]] += comb(n, p) / 2.0 ** (n + 1)
    return ops


def child_moments(parent: MomentList, axis: int, x: float) -> MomentList:
    """Moments of the half of a full block on the ``x`` side along ``axis``.

    ``x`` is the block minimum for the left half, the maximum for the right.
    """
    ops = _child_operators(parent.k, axis)
    mat = ops[0] + x * ops[1] + x * x * ops[2] + x**3 * ops[3]
    return MomentList(parent.k, mat @ parent.values)


def tree_moments(t: Tree, k: int, r: int) -> MomentList:
    """Moments of the black region of ``t`` (upper hull at precision ``r``)."""
    depth = k * r
    lo = [0.0] * k
    hi = [1.0] * k
    total = np.zeros(len(moment_keys(k)))

    def rec(node, vals, level):
        nonlocal total
        if node.white:
            return
        if node.left is None or level == depth:
            total = total + vals
            return
        axis = level % k
        ops = _child_operators(k, axis)
        mid = (lo[axis] + hi[axis]) / 2.0
        for x, son, bound in ((lo[axis], node.left, "hi"), (hi[axis], node.right, "lo")):
            if son.white:
                continue
            child = (ops[0] + x * ops[1] + x * x * ops[2] + x**3 * ops[3]) @ vals
            saved_lo, saved_hi = lo[axis], hi[axis]
            if bound == "hi":
                hi[axis] = mid
            else:
                lo[axis] = mid
            rec(son, child, level + 1)
            lo[axis], hi[axis] = saved_lo, saved_hi

    rec(t, unit_moments(k).values, 0)
    return MomentList(k, total)


def block_moments(lo, hi) -> MomentList:
    """Closed-form moments of the box ``[lo, hi]``."""
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    k = lo.size
    vals = []
    for key in moment_keys(k):
        e = _exponents(key, k)
        vals.append(np.prod([(hi[a] ** (n + 1) - lo[a] ** (n + 1)) / (n + 1) for a, n in enumerate(e)]))
    return MomentList(k, vals)


@dataclass
class CenteredMoments:
    """Mass, centroid and mass-normalized central moments of orders 2 and 3."""

    mass: float
    center: np.ndarray
    covariance: np.ndarray
    third: np.ndarray  # full symmetric (k, k, k) tensor

    def items(self):
        """``(key, value)`` pairs of the centered list, keys as in :class:`MomentList`."""
        k = self.center.size
        out = []
        for key in moment_keys(k):
            axes = [a - 1 for a in key if a]
            if not axes:
                out.append((key, self.mass))
            elif len(axes) == 1:
                out.append((key, float(self.center[axes[0]])))
            elif len(axes) == 2:
                out.append((key, float(self.covariance[axes[0], axes[1]])))
            else:
                out.append((key, float(self.third[axes[0], axes[1], axes[2]])))
        return out


def center_moments(m: MomentList, k: int) -> CenteredMoments:
    """Translate moments to the centroid and divide by the mass."""
    mass = m[(0, 0, 0)]
    if mass <= EPS_MASS:
        raise ValueError("empty region: mass is zero")
    e1 = np.array([m[(i + 1, 0, 0)] for i in range(k)]) / mass
    e2 = np.array([[m[(i + 1, j + 1, 0)] for j in range(k)] for i in range(k)]) / mass
    e3 = np.empty((k, k, k))
    for i in range(k):
        for j in range(k):
            for l in range(k):
                e3[i, j, l] = m[(i + 1, j + 1, l + 1)] / mass
    c = e1
    cov = e2 - np.outer(c, c)
    third = (
        e3
        - np.einsum("i,jl->ijl", c, e2)
        - np.einsum("j,il->ijl", c, e2)
        - np.einsum("l,ij->ijl", c, e2)
        + 2.0 * np.einsum("i,j,l->ijl", c, c, c)
    )
    return CenteredMoments(mass=mass, center=c, covariance=cov, third=third)


@dataclass
class EigenFrame:
    """Principal-axis frame of a region.

    ``rotation`` holds unit eigenvectors as columns, ordered by descending
    eigenvalue; each column's sign makes the third moment along it
    non-negative.
    """

    rotation: np.ndarray
    eigenvalues: np.ndarray
    asymmetries: np.ndarray
    center: np.ndarray
    scale: float


def normalize_moments(c: CenteredMoments, k: int, scale_policy: str = "sqrt") -> EigenFrame:
    """Diagonalize the covariance and orient the axes by their skewness.

    ``scale_policy`` sets the isotropic factor from the largest eigenvalue:
    ``sqrt`` gives ``1/sqrt(12 l1)`` (a unit-length principal extent for a
    uniform slab), ``linear`` gives ``1/l1`` and ``annex`` gives
    ``1/(6 l1)``.
    """
    if scale_policy not in SCALE_POLICIES:
        raise ValueError(f"scale policy must be one of {SCALE_POLICIES}")
    values, vecs = jacobi_eigh(c.covariance)
    values = np.maximum(values, 0.0)
    for i in range(k):
        col = vecs[:, i]
        if col[np.argmax(np.abs(col))] < 0:
            vecs[:, i] = -col
    asym = np.einsum("ijl,ia,ja,la->a", c.third, vecs, vecs, vecs)
    for i in range(k):
        if asym[i] < -EPS_NUM:
            vecs[:, i] = -vecs[:, i]
            asym[i] = -asym[i]
        elif asym[i] < 0:
            asym[i] = 0.0
    l1 = values[0]
    if l1 <= EPS_MASS:
        raise ValueError("degenerate region: largest eigenvalue is zero")
    scale = {"sqrt": 1.0 / np.sqrt(12.0 * l1), "linear": 1.0 / l1, "annex": 1.0 / (6.0 * l1)}[scale_policy]
    return EigenFrame(rotation=vecs, eigenvalues=values, asymmetries=asym, center=c.center.copy(), scale=float(scale))


def frame_matrix(frame: EigenFrame) -> np.ndarray:
    """Homography ``x -> 1/2 + s R^T (x - c)`` of a frame."""
    lin = frame.scale * frame.rotation.T
    return affine_matrix(lin, 0.5 - lin @ frame.center)


def eigen_tree(t: Tree, frame: EigenFrame, k: int, r_analysis: int, r_build: int, fast: bool = True) -> Tree:
    """Region re-expressed in its principal frame, centered in the unit cube."""
    m = frame_matrix(frame)
    transform = homographic_transform_fast if fast else homographic_transform
    out = transform(t, m, k, r_analysis, r_build)
    flags = [bool(a < 0) for a in frame.asymmetries]
    if any(flags):
        out = symmetry_tree(out, flags, k, r_build)
    return out


def eigen_tree_of(t: Tree, k: int, r: int, scale_policy: str = "sqrt", fast: bool = True):
    """Moments, frame and Eigen tree of ``t`` in one call; returns ``(tree, frame)``."""
    frame = normalize_moments(center_moments(tree_moments(t, k, r), k), k, scale_policy)
    return eigen_tree(t, frame, k, r, r, fast=fast), frame
