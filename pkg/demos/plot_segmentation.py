"""
Connected components
====================

Adjacency is found directly between leaves of different sizes, so big
uniform blocks count as one node of the graph.
"""

import numpy as np

from hypertree import contains, label_components, search_adjacencies, segment_forest
from hypertree.builder import tree_from_cells

k, r = 2, 4
n = 1 << r

rng = np.random.default_rng(3)
cells = {(int(x), int(y)) for x, y in rng.integers(0, n, (70, 2))}
cells |= {(x, y) for x in range(2, 7) for y in range(9, 14)}
t = tree_from_cells(sorted(cells), k, r)

# Faces only (d1) versus faces and corners (dinf)
for metric in ("d1", "dinf"):
    g = search_adjacencies(t, metric, k, r)
    labeled, count = label_components(t, metric, k, r)
    print(f"{metric}: {len(g.nodes)} leaves, {len(g.edges)} edges, {count} components")

# Draw each dinf component with its own letter
labeled, count = label_components(t, "dinf", k, r)
parts = segment_forest(labeled, count, k, r)
for y in reversed(range(n)):
    row = ""
    for x in range(n):
        hit = [i for i, p in enumerate(parts) if contains(p, (x, y), k, r)]
        row += chr(ord("a") + hit[0] % 26) if hit else "."
    print(row)
