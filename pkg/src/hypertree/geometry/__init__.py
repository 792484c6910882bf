"""Polytope rasterization, projective transforms and views."""

from .polytope import (
    EPS_GEOM,
    Polytope,
    box_polytope,
    intersect_convex,
    polytope_tree,
    position_vs_hyperplane,
    split_faces,
    split_polytope,
    split_vertices,
    unit_polytope,
)
from .transform import (
    affine_matrix,
    homographic_transform,
    homographic_transform_fast,
    transform_polytope_of,
)
from .views import project, remove_hidden, symmetry_tree

__all__ = [
    "EPS_GEOM",
    "Polytope",
    "box_polytope",
    "intersect_convex",
    "polytope_tree",
    "position_vs_hyperplane",
    "split_faces",
    "split_polytope",
    "split_vertices",
    "unit_polytope",
    "affine_matrix",
    "homographic_transform",
    "homographic_transform_fast",
    "transform_polytope_of",
    "project",
    "remove_hidden",
    "symmetry_tree",
]
