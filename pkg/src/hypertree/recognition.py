"""Supervised recognition from moment attributes (spectral) or Eigen trees (correlative)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .boolean import union
from .builder import RefBox, cell_in_box, grow_bounds
from .core import WHITE, Color, Tree, leaves, union_subtrees
from .metric import hausdorff
from .moments import EigenFrame, eigen_tree_of

__all__ = [
    "attributes_of",
    "SpectralBase",
    "spectral_learn",
    "spectral_classify",
    "CorrelativeBase",
    "correlative_learn",
    "correlative_classify",
    "R_LEARN",
    "scores",
]

R_LEARN = 6


def attributes_of(frame: EigenFrame, k: int) -> np.ndarray:
    """``2k - 1`` shape attributes: ``l2/l1 .. lk/l1`` then ``a1 .. ak / l1^1.5``.

    Dividing the third moments by ``l1^1.5`` makes the whole vector
    invariant to isotropic scaling, not only the eigenvalue ratios.
    """
    l1 = float(frame.eigenvalues[0])
    if l1 <= 0.0:
        raise ValueError("degenerate frame: largest eigenvalue is zero")
    ratios = np.asarray(frame.eigenvalues[1:k], dtype=float) / l1
    skew = np.asarray(frame.asymmetries[:k], dtype=float) / l1**1.5
    return np.concatenate([ratios, skew])


@dataclass
class SpectralBase:
    """Learned attribute-space tree; black leaves hold frozensets of labels."""

    dims: int
    r: int
    box: RefBox
    tree: Tree

    @property
    def cells(self) -> dict:
        return {p: node.annotation for p, node in leaves(self.tree) if node.black}

    @classmethod
    def from_cells(cls, dims: int, r: int, box: RefBox, cells: dict) -> "SpectralBase":
        t = WHITE
        for path, labels in cells.items():
            t = _insert_labels(t, [1 if ch == "R" else 0 for ch in path], frozenset(labels))
        return cls(dims, r, box, t)


def _cell_bits(cell, k, r):
    return [(cell[lv % k] >> (r - 1 - lv // k)) & 1 for lv in range(k * r)]


def _insert_labels(node, bits, labels, i=0):
    if i == len(bits):
        old = node.annotation if node.black and node.left is None and node.annotation else frozenset()
        return Tree(Color.BLACK, annotation=frozenset(old | labels))
    if node.left is None and node.black:
        raise ValueError("labelled cell overlaps a coarser labelled cell")
    if bits[i]:
        return union_subtrees(node.son(0), _insert_labels(node.son(1), bits, labels, i + 1))
    return union_subtrees(_insert_labels(node.son(0), bits, labels, i + 1), node.son(1))


def spectral_learn(samples, r_learn: int = R_LEARN) -> SpectralBase:
    """Tree over attribute space with each sample's cell tagged by its label.

    The reference box starts as the unit box at the floor of the first
    vector and grows by powers of two to hold every vector.  Labels that
    fall into the same cell are all kept.
    """
    samples = [(label, np.asarray(v, dtype=float)) for label, v in samples]
    if not samples:
        raise ValueError("no training samples")
    dims = samples[0][1].size
    if any(v.size != dims for _, v in samples):
        raise ValueError("attribute vectors of different lengths")
    first = np.floor(samples[0][1])
    box = RefBox(first.tolist(), (first + 1.0).tolist())
    for _, v in samples:
        box = grow_bounds(box, v.tolist())
    t = WHITE
    for label, v in samples:
        cell = cell_in_box(v.tolist(), box, r_learn)
        t = _insert_labels(t, _cell_bits(cell, dims, r_learn), frozenset([label]))
    return SpectralBase(dims, r_learn, box, t)


def spectral_classify(base: SpectralBase, v) -> frozenset:
    """Labels of the learned cell holding ``v``; empty when none (or ``v`` is outside the box)."""
    v = np.asarray(v, dtype=float)
    if v.size != base.dims:
        raise ValueError(f"expected {base.dims} attributes")
    if not np.all(np.isfinite(v)) or v.tolist() not in base.box:
        return frozenset()
    cell = cell_in_box(v.tolist(), base.box, base.r)
    node = base.tree
    for bit in _cell_bits(cell, base.dims, base.r):
        if node.left is None:
            break
        node = node.son(bit)
    if node.black and node.annotation:
        return frozenset(node.annotation)
    return frozenset()


@dataclass
class CorrelativeBase:
    """Per-label union of the Eigen trees of its training shapes."""

    k: int
    r: int
    trees: dict = field(default_factory=dict)
    scale_policy: str = "sqrt"


def correlative_learn(samples, k: int, r: int, scale_policy: str = "sqrt") -> CorrelativeBase:
    base = CorrelativeBase(k, r, {}, scale_policy)
    for label, t in samples:
        e, _ = eigen_tree_of(t, k, r, scale_policy)
        prev = base.trees.get(label, WHITE)
        base.trees[label] = union(prev, e, k, r)
    return base


def correlative_classify(base: CorrelativeBase, t: Tree, k: int, r: int):
    """``(label, score)`` of the label tree closest to the query's Eigen tree.

    The score is the mass of the symmetric difference; ties go to the label
    that sorts first.
    """
    if not base.trees:
        raise ValueError("empty correlative base")
    if (k, r) != (base.k, base.r):
        raise ValueError("query precision differs from the base")
    q, _ = eigen_tree_of(t, k, r, base.scale_policy)
    best = None
    for label in sorted(base.trees):
        score = hausdorff(q, base.trees[label], k, r)
        if best is None or score < best[1]:
            best = (label, score)
    return best


def scores(base: CorrelativeBase, t: Tree) -> dict:
    """Score of every label for the query ``t``."""
    q, _ = eigen_tree_of(t, base.k, base.r, base.scale_policy)
    return {label: hausdorff(q, tree, base.k, base.r) for label, tree in sorted(base.trees.items())}

