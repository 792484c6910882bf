"""
Slices, codes and files
=======================

A 3-d block can be cut by a set of z values, and any tree can be written
as a short string.
"""

import tempfile
from pathlib import Path

from hypertree import contains, decode_leaves, decode_tree, encode_leaves, encode_tree, extract_slice, insert_slice, mass
from hypertree.builder import RefBox, tree_from_cells
from hypertree.io import read_tree_file, write_tree_file

r = 3
n = 1 << r

# A solid cone: the radius shrinks with z
cone = tree_from_cells([(x, y, z) for x in range(n) for y in range(n) for z in range(n)
                        if (x - 3.5) ** 2 + (y - 3.5) ** 2 < (4 - z / 2) ** 2], 3, r)

# The fixed axis is z (mask), the slab picks z = 5 only
slab = tree_from_cells([(5,)], 1, r)
section = extract_slice(cone, 3, slab, 1, [False, False, True], r)
for y in reversed(range(n)):
    print("".join("#" if contains(section, (x, y), 2, r) else "." for x in range(n)))

# Pushing the section in at z = 7, above the tip, puts a cap on the cone
capped = insert_slice(cone, section, 2, tree_from_cells([(7,)], 1, r), 1, [False, False, True], r)
print(f"\nmass {mass(cone) * n**3:.0f} cells, capped {mass(capped) * n**3:.0f} cells")

# Tree code: pre-order, 0 white leaf, 1 black leaf, 2 internal
code = encode_tree(section)
print("tree code", code, "round trip", decode_tree(code) == section)

# Leaf codes: one base-36 digit per quadtree step, X for an early stop
leaves = encode_leaves(section, 2, r)
print("leaf codes", leaves, "round trip", decode_leaves(leaves, 2, r) == section)

# Files carry the dimension, precision and reference box
with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "section.kdt"
    write_tree_file(path, section, 2, r, RefBox((-1.0, -1.0), (1.0, 1.0)))
    print(path.read_text())
    print(read_tree_file(path)[0] == section)
