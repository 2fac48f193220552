"""Exact rational polyhedral fans over an integer lattice.

Validation of fan axioms, completeness, Demazure-root enumeration,
factorization of a fan into a direct sum along its 1-skeleton, and
detection of products of projective-space fans. All arithmetic is exact.
"""

from .cone import Cone, cone_from_rays, zero_cone
from .decompose import (
    Factorization,
    RayPartition,
    factorize,
    finest_ray_partition,
    lattice_split_index,
    reassemble,
)
from .demazure import (
    NOT_SEMISIMPLE,
    PRODUCT_OF_PROJECTIVE_SPACES,
    SEMISIMPLE_BUT_UNRECOGNIZED,
    Classification,
    DemazureRoot,
    RootSet,
    candidate_rays,
    classify,
    demazure_roots,
    is_projective_skeleton,
    is_semisimple,
    projective_space_roots,
    roots_of_ray,
)
from .errors import (
    DependentRows,
    DuplicateRay,
    GeometryError,
    HypothesisViolated,
    IntersectionNotFace,
    InvalidParameter,
    NotARoot,
    NotComplete,
    NotPointed,
    NotSaturated,
    RedundantRay,
    ShapeMismatch,
    UnboundedRootPolyhedron,
    UnknownRay,
    ZeroVector,
)
from .fan import (
    Fan,
    Subspace,
    direct_sum,
    fan_new,
    hirzebruch_fan,
    product_fan,
    projective_space_fan,
    zero_fan,
)

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "Classification",
    "DemazureRoot",
    "DependentRows",
    "DuplicateRay",
    "Factorization",
    "Fan",
    "GeometryError",
    "HypothesisViolated",
    "IntersectionNotFace",
    "InvalidParameter",
    "NOT_SEMISIMPLE",
    "NotARoot",
    "NotComplete",
    "NotPointed",
    "NotSaturated",
    "PRODUCT_OF_PROJECTIVE_SPACES",
    "RayPartition",
    "RedundantRay",
    "RootSet",
    "SEMISIMPLE_BUT_UNRECOGNIZED",
    "ShapeMismatch",
    "Subspace",
    "UnboundedRootPolyhedron",
    "UnknownRay",
    "ZeroVector",
    "candidate_rays",
    "classify",
    "cone_from_rays",
    "demazure_roots",
    "direct_sum",
    "factorize",
    "fan_new",
    "finest_ray_partition",
    "hirzebruch_fan",
    "is_projective_skeleton",
    "is_semisimple",
    "lattice_split_index",
    "product_fan",
    "projective_space_fan",
    "projective_space_roots",
    "reassemble",
    "roots_of_ray",
    "zero_cone",
    "zero_fan",
]
