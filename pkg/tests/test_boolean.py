import numpy as np
import pytest

from hypertree.boolean import apply, assert_tree, diff, intersect, not_tree, union, xor
from hypertree.core import BLACK, WHITE, Tree, develop, is_canonical
from oracles import from_voxels, random_tree, to_voxels

OPS = {
    "union": (union, np.logical_or),
    "intersect": (intersect, np.logical_and),
    "xor": (xor, np.logical_xor),
    "diff": (diff, lambda a, b: a & ~b),
}


@pytest.mark.parametrize("k,r", [(1, 3), (2, 2), (3, 2), (2, 4)])
def test_binary_ops_match_voxel_oracle(rng, k, r):
    for _ in range(25):
        a, b = random_tree(rng, k, r), random_tree(rng, k, r)
        va, vb = to_voxels(a, k, r), to_voxels(b, k, r)
        for name, (fn, ref) in OPS.items():
            out = fn(a, b, k, r)
            assert out == from_voxels(ref(va, vb)), name
            assert is_canonical(out)
        assert not_tree(a, k, r) == from_voxels(~va)


def test_trivial_identities():
    k, r = 2, 2
    t = Tree(left=BLACK, right=Tree(left=WHITE, right=BLACK))
    assert union(t, WHITE, k, r) == t
    assert intersect(t, BLACK, k, r) == t
    assert xor(t, t, k, r) is WHITE
    assert diff(t, t, k, r) is WHITE
    assert not_tree(not_tree(t, k, r), k, r) == t


def test_assert_truncates_to_upper_hull():
    deep = Tree(left=Tree(left=WHITE, right=BLACK), right=WHITE)
    assert assert_tree(deep, 1, 1) == Tree(left=BLACK, right=WHITE)
    assert assert_tree(deep, 1, 0) is BLACK
    assert assert_tree(deep, 1, 2) == deep


def test_coarser_precision_encloses_finer(rng):
    k = 2
    for _ in range(10):
        t = random_tree(rng, k, 4)
        for r in range(4):
            coarse = assert_tree(t, k, r)
            assert diff(t, coarse, k, 4) is WHITE


def test_unequal_depths_combine():
    shallow = Tree(left=BLACK, right=WHITE)
    deep = Tree(left=WHITE, right=Tree(left=BLACK, right=WHITE))
    assert union(shallow, deep, 1, 2) == Tree(left=BLACK, right=Tree(left=BLACK, right=WHITE))


def test_non_canonical_inputs_give_canonical_output(rng):
    t = random_tree(rng, 2, 3)
    full = develop(t, 6)
    assert union(full, WHITE, 2, 3) == t
    assert is_canonical(intersect(full, full, 2, 3))


def test_apply_rejects_unknown_op():
    with pytest.raises(ValueError):
        apply("nand", WHITE, WHITE, 1, 1)
