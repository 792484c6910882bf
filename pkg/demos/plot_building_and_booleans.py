"""
Building regions and combining them
===================================

A region is a binary tree over the unit square. Each level halves one axis,
cycling x, y, x, y... so two levels make one quadtree step.
"""

import numpy as np

from hypertree import WHITE, add_real_vector, contains, diff, intersect, mass, node_count, union, xor
from hypertree.builder import tree_from_cells

k, r = 2, 4
n = 1 << r


def show(t):
    # row 0 printed last so that y grows upward
    for y in reversed(range(n)):
        print("".join("#" if contains(t, (x, y), k, r) else "." for x in range(n)))
    print()


# A disk of cells, inserted one integer address at a time
g = np.arange(n) + 0.5
disk = tree_from_cells([(x, y) for x in range(n) for y in range(n)
                        if (g[x] - 6) ** 2 + (g[y] - 7) ** 2 < 20], k, r)
show(disk)

# Real points land in the cell that holds them; here a sparse diagonal
line = WHITE
for s in np.linspace(0.02, 0.98, 40):
    line = add_real_vector(line, (s, 1 - s), k, r)
show(line)

# Boolean operations walk both trees together and stop at uniform blocks
for name, op in (("union", union), ("intersect", intersect), ("xor", xor), ("diff", diff)):
    t = op(disk, line, k, r)
    print(f"{name:9s} mass={mass(t):.4f} nodes={node_count(t)}")
show(diff(disk, line, k, r))
