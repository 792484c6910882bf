"""Tree generation from integer and real vectors, with inductive-limit growth."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import BLACK, WHITE, Tree, union_subtrees

__all__ = [
    "RefBox",
    "unit_box",
    "add_int_vector",
    "add_real_vector",
    "contains",
    "cell_of",
    "cell_in_box",
    "grow_bounds",
    "extend_tree",
    "add_with_growth",
    "tree_from_cells",
]

MAX_GROWTH_STEPS = 64


@dataclass(frozen=True)
class RefBox:
    """Per-axis half-open bounds ``[min, max)`` of the hypercube a tree models."""

    min: tuple
    max: tuple

    def __post_init__(self):
        object.__setattr__(self, "min", tuple(float(x) for x in self.min))
        object.__setattr__(self, "max", tuple(float(x) for x in self.max))
        if len(self.min) != len(self.max):
            raise ValueError("min and max must have the same length")
        if any(hi <= lo for lo, hi in zip(self.min, self.max)):
            raise ValueError("max must exceed min on every axis")

    @property
    def dims(self) -> int:
        return len(self.min)

    @property
    def span(self) -> float:
        return self.max[0] - self.min[0]

    def __contains__(self, v) -> bool:
        return all(lo <= x < hi for lo, x, hi in zip(self.min, v, self.max))

    def normalize(self, v) -> tuple:
        """Map a point of the box into ``[0, 1)^k``."""
        out = []
        for lo, x, hi in zip(self.min, v, self.max):
            u = (x - lo) / (hi - lo)
            if u >= 1.0:
                u = math.nextafter(1.0, 0.0)
            out.append(u)
        return tuple(out)


def unit_box(k: int) -> RefBox:
    return RefBox((0.0,) * k, (1.0,) * k)


def _check_int_vector(v, k, r):
    if len(v) != k:
        raise ValueError(f"expected {k} coordinates, got {len(v)}")
    top = 1 << r
    for x in v:
        if int(x) != x or not 0 <= x < top:
            raise ValueError(f"coordinate {x!r} outside [0, {top - 1}]")


def add_int_vector(t: Tree, v: Sequence[int], k: int, r: int) -> Tree:
    """Blacken the cell addressed by ``v`` (coordinates in ``[0, 2^r)``).

    Level ``l`` reads the next most significant unread bit of coordinate
    ``l mod k``; a 0 bit goes left.
    """
    _check_int_vector(v, k, r)
    v = [int(x) for x in v]
    depth = k * r

    def add(node, level):
        if level == depth:
            return BLACK
        if node.left is None and node.black:
            return node
        axis = level % k
        bit = (v[axis] >> (r - 1 - level // k)) & 1
        if bit:
            return union_subtrees(node.son(0), add(node.son(1), level + 1))
        return union_subtrees(add(node.son(0), level + 1), node.son(1))

    return add(t, 0)


def cell_of(v: Sequence[float], r: int) -> tuple:
    """Integer cell of a point of ``[0, 1)^k`` at precision ``r``."""
    scale = 1 << r
    return tuple(min(int(math.floor(x * scale)), scale - 1) for x in v)


def cell_in_box(v: Sequence[float], box: RefBox, r: int) -> tuple:
    """Integer cell of a point of ``box`` at precision ``r``, by exact bisection."""
    out = []
    for x, lo, hi in zip(v, box.min, box.max):
        c = 0
        for _ in range(r):
            mid = (lo + hi) / 2.0
            if x < mid:
                hi, c = mid, c << 1
            else:
                lo, c = mid, (c << 1) | 1
        out.append(c)
    return tuple(out)


def add_real_vector(t: Tree, v: Sequence[float], k: int, r: int, box: RefBox | None = None) -> Tree:
    """Blacken the cell holding a point of ``[0, 1)^k`` (or of ``box``).

    A coordinate equal to a block midpoint goes to the right half.  With a
    box, raw coordinates are compared against the box's own midpoints, which
    avoids the rounding of an explicit normalization.
    """
    if len(v) != k:
        raise ValueError(f"expected {k} coordinates, got {len(v)}")
    box = box or unit_box(k)
    if box.dims != k:
        raise ValueError("box dimension does not match k")
    if v not in box:
        raise ValueError(f"point {tuple(v)!r} outside the reference box")
    lo = list(box.min)
    hi = list(box.max)
    depth = k * r

    def add(node, level):
        if level == depth:
            return BLACK
        if node.left is None and node.black:
            return node
        axis = level % k
        mid = (lo[axis] + hi[axis]) / 2.0
        if v[axis] < mid:
            saved, hi[axis] = hi[axis], mid
            out = union_subtrees(add(node.son(0), level + 1), node.son(1))
            hi[axis] = saved
        else:
            saved, lo[axis] = lo[axis], mid
            out = union_subtrees(node.son(0), add(node.son(1), level + 1))
            lo[axis] = saved
        return out

    return add(t, 0)


def contains(t: Tree, v: Sequence[int], k: int, r: int) -> bool:
    """True when the node reached by the cell address ``v`` is not white."""
    _check_int_vector(v, k, r)
    node = t
    for level in range(k * r):
        if node.left is None:
            break
        axis = level % k
        node = node.son((int(v[axis]) >> (r - 1 - level // k)) & 1)
    return not node.white


def tree_from_cells(cells, k: int, r: int) -> Tree:
    t = WHITE
    for c in cells:
        t = add_int_vector(t, c, k, r)
    return t


def grow_bounds(box: RefBox, v: Sequence[float]) -> RefBox:
    """Smallest power-of-2 enlargement of ``box`` that holds ``v``.

    Each step doubles the span; on every axis the box extends toward the point
    (downward when the point lies below, upward otherwise), so the old box
    remains one aligned sub-block of the new one.
    """
    if len(v) != box.dims:
        raise ValueError("dimension mismatch between box and vector")
    if any(not math.isfinite(x) for x in v):
        raise ValueError("non-finite coordinate")
    lo, hi = list(box.min), list(box.max)
    for _ in range(MAX_GROWTH_STEPS + 1):
        if all(a <= x < b for a, x, b in zip(lo, v, hi)):
            return RefBox(lo, hi)
        for i, x in enumerate(v):
            span = hi[i] - lo[i]
            if x < lo[i]:
                lo[i] -= span
            else:
                hi[i] += span
    raise ValueError(f"bounds did not converge within {MAX_GROWTH_STEPS} doublings")


def _embedding(old: RefBox, new: RefBox):
    """Doubling count and per-axis sub-block index of ``old`` inside ``new``."""
    if old.dims != new.dims:
        raise ValueError("boxes of different dimension")
    ratios = [(b - a) / (d - c) for a, b, c, d in zip(new.min, new.max, old.min, old.max)]
    m = round(math.log2(ratios[0])) if ratios[0] >= 1 else -1
    if m < 0 or any(q != 2.0**m for q in ratios):
        raise ValueError("span ratio is not a common power of 2")
    index = []
    for a, c, d in zip(new.min, old.min, old.max):
        pos = (c - a) / (d - c)
        if pos != int(pos) or not 0 <= pos < 2**m:
            raise ValueError("old box is not an aligned sub-block of the new box")
        index.append(int(pos))
    return m, index


def extend_tree(t: Tree, old: RefBox, new: RefBox, k: int) -> Tree:
    """Re-express ``t`` (built over ``old``) as a tree over the larger ``new``."""
    m, index = _embedding(old, new)
    node = t
    for level in reversed(range(m * k)):
        axis = level % k
        bit = (index[axis] >> (m - 1 - level // k)) & 1
        node = union_subtrees(WHITE, node) if bit else union_subtrees(node, WHITE)
    return node


def add_with_growth(t: Tree, box: RefBox, v: Sequence[float], k: int, r: int):
    """Add a raw point, growing the reference box first when needed.

    Returns ``(tree, box)``.
    """
    new = grow_bounds(box, v)
    if new != box:
        t = extend_tree(t, box, new, k)
    return add_real_vector(t, v, k, r, new), new
