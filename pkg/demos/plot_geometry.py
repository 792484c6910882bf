"""
Polytopes, homographies and views
=================================

Convex polytopes rasterize straight into trees, and a tree can be pushed
through any invertible projective map of the square.
"""

import numpy as np

from hypertree import (
    contains,
    homographic_transform,
    homographic_transform_fast,
    mass,
    polytope_tree,
    project,
    remove_hidden,
    symmetry_tree,
    transform_polytope_of,
)
from hypertree.geometry import affine_matrix

k, r = 2, 5
n = 1 << r


def show(t, dims=2):
    if dims == 1:
        print("".join("#" if contains(t, (x,), 1, r) else "." for x in range(n)) + "\n")
        return
    for y in reversed(range(n)):
        print("".join("#" if contains(t, (x, y), k, r) else "." for x in range(n)))
    print()


# The image of the unit square under a similarity: a tilted square.
# transform_polytope_of wants the map from output to input, hence the inverse.
a = np.radians(30)
lin = 0.45 * np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])
m = affine_matrix(lin, np.array([0.5, 0.5]) - lin @ [0.5, 0.5])
square = polytope_tree(transform_polytope_of(np.linalg.inv(m), k), k, r)
show(square)
# Every cell the polygon touches is kept, so the mass overshoots the area
print(f"mass {mass(square):.4f}, exact area {0.45 ** 2:.4f}\n")

# Now move the tree itself: a perspective map with a nonzero bottom row
persp = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.3, 0.0, 1.0]])
warped = homographic_transform_fast(square, persp, k, r, r)
show(warped)

# The slow and fast versions build the same tree
print("fast == slow:", warped == homographic_transform(square, persp, k, r, r), "\n")

# Mirror along x, then keep only the cells seen from below along y
show(symmetry_tree(square, [True, False], k, r))
show(remove_hidden(square, 1, k, r))

# Projection along y leaves the shadow on the x axis
show(project(square, 1, k, r), dims=1)
