import numpy as np
import pytest

from hypertree.core import BLACK
from hypertree.geometry import (
    box_polytope,
    intersect_convex,
    polytope_tree,
    position_vs_hyperplane,
    split_faces,
    split_polytope,
    split_vertices,
    transform_polytope_of,
    unit_polytope,
)
from hypertree.metric import mass
from oracles import from_voxels, sample_square, to_voxels


def test_unit_polytope_layout():
    p = unit_polytope(2)
    assert p.vertices.tolist() == [[0, 0], [1, 0], [0, 1], [1, 1]]
    assert p.lower.tolist() == [[1, 0, 0], [0, 1, 0]]
    assert p.upper.tolist() == [[1, 0, -1], [0, 1, -1]]


def test_butterfly_split():
    p = unit_polytope(2)
    left, right, _, _ = split_vertices(p.vertices, 0)
    assert left.tolist() == [[0, 0], [0.5, 0], [0, 1], [0.5, 1]]
    assert right.tolist() == [[0.5, 0], [1, 0], [0.5, 1], [1, 1]]
    (ll, lu), (rl, ru) = split_faces(p.lower, p.upper, 0)
    assert lu[0].tolist() == [1, 0, -0.5]
    assert rl[0].tolist() == [1, 0, -0.5]
    with pytest.raises(ValueError):
        split_vertices(p.vertices, 2)


def test_position_vs_hyperplane():
    p = unit_polytope(2)
    assert position_vs_hyperplane(p, [1, 0, 0.5]) == (False, False, True)
    assert position_vs_hyperplane(p, [1, 0, -2]) == (False, True, False)
    assert position_vs_hyperplane(p, [1, 0, -0.5]) == (False, False, False)
    assert position_vs_hyperplane(p, [0, 0, 0]) == (True, True, True)


def test_intersection_and_inclusion():
    a = box_polytope([0, 0], [0.5, 0.5])
    inner = box_polytope([0.1, 0.1], [0.2, 0.2])
    far = box_polytope([0.7, 0.7], [0.9, 0.9])
    touching = box_polytope([0.5, 0.0], [1.0, 0.5])
    overlap = box_polytope([0.25, 0.25], [0.75, 0.75])
    assert intersect_convex(a, inner) == (True, False, True)
    assert intersect_convex(inner, a) == (True, True, False)
    assert intersect_convex(a, far) == (False, False, False)
    assert intersect_convex(a, touching)[0] is False
    assert intersect_convex(a, overlap) == (True, False, False)
    assert intersect_convex(a, a) == (True, True, True)


def test_unit_cube_rasterizes_black():
    for k in (1, 2, 3):
        assert polytope_tree(unit_polytope(k), k, 3) is BLACK


@pytest.mark.parametrize("k,r", [(1, 5), (2, 4), (3, 3)])
def test_aligned_boxes_rasterize_exactly(rng, k, r):
    n = 1 << r
    for _ in range(20):
        lo = rng.integers(0, n, k)
        hi = np.array([rng.integers(a + 1, n + 1) for a in lo])
        t = polytope_tree(box_polytope(lo / n, hi / n), k, r)
        expect = np.zeros((n,) * k, dtype=bool)
        expect[tuple(slice(a, b) for a, b in zip(lo, hi))] = True
        assert t == from_voxels(expect)


def test_rotated_square_is_conservative_and_tight():
    r, n = 6, 64
    angle, half, center = 0.4, 0.25, (0.5, 0.5)
    c, s = np.cos(angle), np.sin(angle)
    rot = np.array([[c, -s], [s, c]])
    lin = rot * (2 * half)
    m = np.eye(3)
    m[:2, :2] = lin
    m[:2, 2] = np.array(center) - lin @ [0.5, 0.5]
    # image of the unit square under m = preimage of it under m^-1
    t = polytope_tree(transform_polytope_of(np.linalg.inv(m), 2), 2, r)
    sampled = sample_square(center, half, angle, n)
    raster = to_voxels(t, 2, r)
    assert not (sampled & ~raster).any()
    err = mass(from_voxels(raster ^ sampled))
    assert err <= 8 * (8 * half) * 2.0**-r


def test_perspective_split_is_exact_preimage():
    m = np.array([[1.0, 0.2, 0.1], [0.1, 0.9, 0.0], [0.3, 0.2, 1.0]])
    inv = np.linalg.inv(m)
    p = transform_polytope_of(m, 2)
    left, right = split_polytope(p, 0)
    left, _ = split_polytope(left, 1)
    lo, hi = np.array([0.0, 0.0]), np.array([0.5, 0.5])
    corners = np.array([[lo[0] + (hi[0] - lo[0]) * (i & 1), lo[1] + (hi[1] - lo[1]) * (i >> 1 & 1), 1.0] for i in range(4)])
    h = corners @ inv.T
    expect = h[:, :2] / h[:, 2:]
    assert np.allclose(left.vertices, expect, atol=1e-12)
