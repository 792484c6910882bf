"""
Learning and recognizing shapes
===============================

Two learners. The spectral one stores shape attribute vectors as cells of a
tree; the correlative one keeps eigen trees and picks the nearest.
"""

import numpy as np

from hypertree import (
    attributes_of,
    center_moments,
    correlative_classify,
    correlative_learn,
    normalize_moments,
    spectral_classify,
    spectral_learn,
    tree_moments,
)
from hypertree.builder import tree_from_cells
from hypertree.recognition import scores

k, r = 2, 6
n = 1 << r
X, Y = np.meshgrid(np.arange(n) + 0.5, np.arange(n) + 0.5, indexing="ij")


def tree(mask):
    return tree_from_cells(list(zip(*np.nonzero(mask))), k, r)


def disk(cx, cy, rad):
    return tree((X - cx) ** 2 + (Y - cy) ** 2 < rad**2)


def bar(x0, x1, y0, y1):
    return tree((X >= x0) & (X < x1) & (Y >= y0) & (Y < y1))


training = [("disk", disk(24, 30, 12)), ("bar", bar(10, 40, 20, 28))]


# Spectral: eigenvalue ratios and skewness, one cell per training vector
def attrs(t):
    return attributes_of(normalize_moments(center_moments(tree_moments(t, k, r), k), k), k)


spectral = spectral_learn([(name, attrs(t)) for name, t in training])
print("spectral, exact training shapes:", [set(spectral_classify(spectral, attrs(t))) for _, t in training])
# A new shape is recognized only if its vector lands in a stored cell
print("spectral, new disk:", set(spectral_classify(spectral, attrs(disk(40, 40, 10)))))

# Correlative: distance between eigen trees, smallest wins
base = correlative_learn(training, k, r)
for name, t in (("new disk", disk(40, 40, 10)), ("new bar", bar(5, 45, 30, 36)), ("upright bar", bar(30, 36, 5, 45))):
    label, score = correlative_classify(base, t, k, r)
    print(f"{name:12s} -> {label:5s} distance {score:.4f}  all {scores(base, t)}")
