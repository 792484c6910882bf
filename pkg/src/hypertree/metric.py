"""Hypervolume and the XOR-mass distance between trees."""

from __future__ import annotations

from fractions import Fraction

from .boolean import xor
from .core import Tree

__all__ = ["mass", "mass_exact", "hausdorff", "hausdorff_exact"]


def mass_exact(t: Tree, k: int = 1, r: int = 0) -> Fraction:
    """Exact hypervolume: sum of ``2**-depth`` over black terminals.

    Accumulated as an integer count of the finest cells present, so the
    result is an exact dyadic rational whatever the depth.  ``k`` and ``r``
    only document the modeling space; the sum does not depend on them.
    """
    counts = {}
    stack = [(t, 0)]
    while stack:
        node, d = stack.pop()
        if node.left is None:
            if node.black:
                counts[d] = counts.get(d, 0) + 1
        else:
            stack.append((node.left, d + 1))
            stack.append((node.right, d + 1))
    if not counts:
        return Fraction(0)
    finest = max(counts)
    units = sum(n << (finest - d) for d, n in counts.items())
    return Fraction(units, 1 << finest)


def mass(t: Tree, k: int = 1, r: int = 0) -> float:
    return float(mass_exact(t, k, r))


def hausdorff_exact(a: Tree, b: Tree, k: int, r: int) -> Fraction:
    return mass_exact(xor(a, b, k, r))


def hausdorff(a: Tree, b: Tree, k: int, r: int) -> float:
    """Mass of the symmetric difference of ``a`` and ``b`` at precision ``r``."""
    return float(hausdorff_exact(a, b, k, r))
