"""Binary-emulated 2^k-trees for modeling subsets of the unit hypercube."""

from .boolean import assert_tree, diff, intersect, not_tree, union, xor
from .builder import (
    RefBox,
    add_int_vector,
    add_real_vector,
    add_with_growth,
    contains,
    extend_tree,
    grow_bounds,
    tree_from_cells,
    unit_box,
)
from .core import (
    BLACK,
    WHITE,
    Color,
    Tree,
    copy_tree,
    delete_tree,
    depth_of,
    develop,
    fission,
    is_canonical,
    leaves,
    make_tree,
    merge,
    node_count,
    union_subtrees,
)
from .geometry import (
    Polytope,
    homographic_transform,
    homographic_transform_fast,
    intersect_convex,
    polytope_tree,
    project,
    remove_hidden,
    symmetry_tree,
    transform_polytope_of,
    unit_polytope,
)
from .io import decode_leaves, decode_tree, encode_leaves, encode_tree
from .metric import hausdorff, mass, mass_exact
from .moments import (
    center_moments,
    child_moments,
    eigen_tree,
    eigen_tree_of,
    normalize_moments,
    tree_moments,
    unit_moments,
)
from .recognition import (
    attributes_of,
    correlative_classify,
    correlative_learn,
    spectral_classify,
    spectral_learn,
)
from .segmentation import extract_component, label_components, search_adjacencies, segment_forest
from .slices import extract_slice, insert_slice

__version__ = "0.1.0"
