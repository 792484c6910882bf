import numpy as np
import pytest

from hypertree.core import BLACK, WHITE, Tree, develop, leaves
from hypertree.segmentation import (
    extract_component,
    label_components,
    search_adjacencies,
    segment_forest,
)
from oracles import flood_fill, from_voxels, partition, random_voxels, to_voxels


def path_to_cell(path, k, r):
    cell = [0] * k
    for level, ch in enumerate(path):
        cell[level % k] = cell[level % k] * 2 + (ch == "R")
    return tuple(cell)


def cell_edges(a, metric):
    """Neighbour pairs of black cells by brute force."""
    cells = [tuple(int(i) for i in c) for c in zip(*np.nonzero(a))]
    out = set()
    for i, p in enumerate(cells):
        for q in cells[i + 1:]:
            d = [abs(x - y) for x, y in zip(p, q)]
            if max(d) == 1 and (metric == "dinf" or sum(d) == 1):
                out.add(frozenset((p, q)))
    return out


@pytest.mark.parametrize("metric", ["d1", "dinf"])
@pytest.mark.parametrize("k,r", [(2, 3), (3, 2)])
def test_developed_tree_edges_match_grid(rng, metric, k, r):
    for _ in range(5):
        a = random_voxels(rng, k, r)
        t = develop(from_voxels(a), k * r)
        g = search_adjacencies(t, metric, k, r)
        got = {frozenset((path_to_cell(p, k, r), path_to_cell(q, k, r))) for p, q in g.edges}
        assert got == cell_edges(a, metric)


def test_canonical_leaves_of_different_sizes():
    # big left half, right half split into two cells along y
    t = Tree(left=BLACK, right=Tree(left=BLACK, right=BLACK))
    g = search_adjacencies(t, "d1", 2, 1)
    assert g.edges == {("L", "RL"), ("L", "RR"), ("RL", "RR")}


def test_diagonal_only_contact():
    # cells (0, 0) and (1, 1) at r = 1
    t = Tree(left=Tree(left=BLACK, right=WHITE), right=Tree(left=WHITE, right=BLACK))
    assert search_adjacencies(t, "d1", 2, 1).edges == set()
    assert search_adjacencies(t, "dinf", 2, 1).edges == {("LL", "RR")}


def test_interior_degree():
    for k in (2, 3):
        t = develop(BLACK, 2 * k)
        center = "".join("R" if lv < k else "L" for lv in range(2 * k))  # cell (1, ..., 1)
        assert search_adjacencies(t, "d1", k, 2).degree(center) == 2 * k
        assert search_adjacencies(t, "dinf", k, 2).degree(center) == 3**k - 1


@pytest.mark.parametrize("metric", ["d1", "dinf"])
def test_labels_match_flood_fill(rng, metric):
    k, r = 2, 4
    for _ in range(20):
        a = random_voxels(rng, k, r, density=0.45)
        labels, count = flood_fill(a, metric)
        lt, n = label_components(from_voxels(a), metric, k, r)
        assert n == count
        forest = segment_forest(lt, n, k, r)
        got = set()
        for seg in forest:
            cells = {tuple(int(i) for i in c) for c in zip(*np.nonzero(to_voxels(seg, k, r)))}
            got.add(frozenset(cells))
        assert got == partition(labels)


def test_labels_are_in_depth_first_order():
    a = np.zeros((4, 4), dtype=bool)
    a[0, 0] = a[3, 3] = a[3, 0] = True
    lt, n = label_components(from_voxels(a), "d1", 2, 2)
    assert n == 3
    seen = [leaf.annotation for _, leaf in leaves(lt) if leaf.black]
    assert seen == [1, 2, 3]


def test_empty_and_full():
    assert label_components(WHITE, "d1", 2, 2)[1] == 0
    lt, n = label_components(BLACK, "dinf", 2, 2)
    assert n == 1 and extract_component(lt, 1, 2, 2) is BLACK


def test_errors():
    with pytest.raises(ValueError):
        search_adjacencies(BLACK, "d2", 2, 2)
    with pytest.raises(ValueError):
        search_adjacencies(develop(BLACK, 5), "d1", 2, 2)
