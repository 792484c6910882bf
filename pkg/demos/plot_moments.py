"""
Moments and the eigen tree
==========================

Moments up to order three come from one pass over the leaves. The
principal frame they define gives a pose-free copy of the region.
"""

import numpy as np

from hypertree import center_moments, contains, eigen_tree_of, hausdorff, mass, normalize_moments, tree_moments
from hypertree.builder import tree_from_cells

k, r = 2, 6
n = 1 << r


def ell(dx=0, dy=0, quarters=0):
    a = np.zeros((n, n), dtype=bool)
    a[10:38, 10:18] = True
    a[10:18, 10:42] = True
    a = np.rot90(a, quarters)
    return tree_from_cells([(x + dx, y + dy) for x, y in zip(*np.nonzero(a))], k, r)


def show(t, step=2):
    for y in reversed(range(0, n, step)):
        print("".join("#" if contains(t, (x, y), k, r) else "." for x in range(0, n, step)))
    print()


t = ell()
m = tree_moments(t, k, r)
print("mass", m[(0, 0, 0)], "first moments", m[(1, 0, 0)], m[(2, 0, 0)])

c = center_moments(m, k)
print("center", c.center)
print("covariance\n", c.covariance)

# The frame: eigenvectors sorted by decreasing variance, signs fixed by skewness
f = normalize_moments(c, k)
print("eigenvalues", f.eigenvalues, "asymmetries", f.asymmetries, "\n")

# Two poses of the same shape give the same eigen tree
e0, _ = eigen_tree_of(t, k, r)
e1, _ = eigen_tree_of(ell(dx=5, dy=-3, quarters=1), k, r)
show(e0)
print("distance between eigen trees:", hausdorff(e0, e1, k, r), "of mass", mass(e0))
