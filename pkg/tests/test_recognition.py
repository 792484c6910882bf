import numpy as np
import pytest

from hypertree.boolean import intersect
from hypertree.builder import RefBox
from hypertree.core import WHITE
from hypertree.io import read_correlative_base, read_spectral_base, write_correlative_base, write_spectral_base
from hypertree.metric import hausdorff, mass
from hypertree.moments import EigenFrame, center_moments, normalize_moments, tree_moments
from hypertree.recognition import (
    attributes_of,
    correlative_classify,
    correlative_learn,
    spectral_classify,
    spectral_learn,
)
from oracles import from_voxels
from shapes import bar, disk, ell, rotate_translate


def frame_of(a, r=6):
    return normalize_moments(center_moments(tree_moments(from_voxels(a), 2, r), 2), 2)


def test_attribute_vector_layout():
    f = EigenFrame(np.eye(3), np.array([4.0, 2.0, 1.0]), np.array([8.0, 0.0, 1.0]), np.zeros(3), 1.0)
    v = attributes_of(f, 3)
    assert v.tolist() == [0.5, 0.25, 1.0, 0.0, 0.125]
    with pytest.raises(ValueError):
        attributes_of(EigenFrame(np.eye(2), np.zeros(2), np.zeros(2), np.zeros(2), 1.0), 2)


def test_attributes_of_disk_are_round():
    v = attributes_of(frame_of(disk(32, 32, 20)), 2)
    assert v[0] == pytest.approx(1.0, abs=0.02)


def test_attributes_invariant_to_cell_exact_pose():
    a = ell()
    v0 = attributes_of(frame_of(a), 2)
    v1 = attributes_of(frame_of(rotate_translate(a, 1, 3, 5)), 2)
    assert np.allclose(v0, v1, atol=1e-9)


def test_spectral_memorizes_training_set():
    samples = [("a", [0.1, 0.2, 0.3]), ("b", [0.8, 0.1, 0.5]), ("c", [2.5, -0.7, 0.0])]
    base = spectral_learn(samples, r_learn=6)
    for label, v in samples:
        assert spectral_classify(base, v) == {label}
    assert spectral_classify(base, [100.0, 0.0, 0.0]) == frozenset()
    assert spectral_classify(base, [0.1 + 1e-4, 0.2, 0.3]) == {"a"}


def test_spectral_collisions_keep_all_labels():
    base = spectral_learn([("a", [0.5, 0.5]), ("b", [0.5, 0.5]), ("a", [0.5, 0.5])], r_learn=4)
    assert spectral_classify(base, [0.5, 0.5]) == {"a", "b"}
    assert len(base.cells) == 1


def test_spectral_base_round_trip(tmp_path):
    base = spectral_learn([("disk", [0.9, 0.0, 0.1]), ("bar", [0.1, 0.0, 0.0]), ("bar", [0.12, 0.0, 0.02])])
    write_spectral_base(tmp_path / "s.base", base)
    back = read_spectral_base(tmp_path / "s.base")
    assert back.tree == base.tree and back.cells == base.cells and back.box == base.box
    assert isinstance(back.box, RefBox)


@pytest.fixture(scope="module")
def two_class_base():
    samples = [("disk", from_voxels(disk())), ("bar", from_voxels(bar()))]
    return correlative_learn(samples, 2, 6)


def test_correlative_exemplar_scores_zero(two_class_base):
    label, score = correlative_classify(two_class_base, from_voxels(bar()), 2, 6)
    assert (label, score) == ("bar", 0.0)


def test_correlative_new_instances(two_class_base):
    assert correlative_classify(two_class_base, from_voxels(bar(5, 45, 30, 36)), 2, 6)[0] == "bar"
    assert correlative_classify(two_class_base, from_voxels(disk(40, 40, 10)), 2, 6)[0] == "disk"


def test_correlative_scores_obey_inclusion_exclusion(two_class_base):
    from hypertree.moments import eigen_tree_of

    q, _ = eigen_tree_of(from_voxels(ell()), 2, 6)
    for tree in two_class_base.trees.values():
        expect = mass(q) + mass(tree) - 2 * mass(intersect(q, tree, 2, 6))
        assert hausdorff(q, tree, 2, 6) == expect


def test_correlative_base_round_trip(tmp_path, two_class_base):
    write_correlative_base(tmp_path / "c.base", two_class_base)
    back = read_correlative_base(tmp_path / "c.base")
    assert back.trees == two_class_base.trees and (back.k, back.r) == (2, 6)


def test_correlative_errors(two_class_base):
    with pytest.raises(ValueError):
        correlative_classify(two_class_base, WHITE, 2, 6)
    with pytest.raises(ValueError):
        correlative_classify(two_class_base, from_voxels(bar()), 2, 5)
