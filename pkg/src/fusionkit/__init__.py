"""fusionkit: level-truncated sl2 fusion products and their diagram combinatorics.

The package computes, exactly over the integers, fusion products of
finite-dimensional sl2-modules at a fixed level, enumerates the crossingless
matches that index their intertwiner bases and variety strata, and
cross-verifies every counting identity relating the two pictures.
"""

from .bracketing import (
    BracketTree,
    NodeScope,
    count_truncated,
    enumerate_trees,
    parse_bracketing,
    ra_count,
    ra_count_c,
    rb_count,
    rb_count_c,
    satisfies_truncation,
)
from .diagrams import (
    ArcCensus,
    BoxConfig,
    LowerMatch,
    OrientedLowerMatch,
    arc_census,
    canonical_key,
    enumerate_cm,
    enumerate_lcm,
    orientations,
    parse_canonical_key,
    validate,
)
from .geometry import (
    ComponentCensus,
    KernelProfile,
    component_census,
    dim_m,
    dim_z,
    hw_from_rank,
    kernel_profile,
    nl_condition,
)
from .module_action import (
    ActionMatrices,
    ModuleBasis,
    action_matrices,
    build_basis,
    isotypic_census,
    verify_sl2,
)
from .ring import (
    RingElement,
    dim_hom_fusion,
    dim_hom_tensor,
    fuse_many,
    fuse_pair,
    quotient_reduce,
    ring_mul,
    tensor_cg,
    weight_multiplicities,
)

__version__ = "0.1.0"

__all__ = [
    "ActionMatrices",
    "ArcCensus",
    "BoxConfig",
    "BracketTree",
    "ComponentCensus",
    "KernelProfile",
    "LowerMatch",
    "ModuleBasis",
    "NodeScope",
    "OrientedLowerMatch",
    "RingElement",
    "action_matrices",
    "arc_census",
    "build_basis",
    "canonical_key",
    "component_census",
    "count_truncated",
    "dim_hom_fusion",
    "dim_hom_tensor",
    "dim_m",
    "dim_z",
    "enumerate_cm",
    "enumerate_lcm",
    "enumerate_trees",
    "fuse_many",
    "fuse_pair",
    "hw_from_rank",
    "isotypic_census",
    "kernel_profile",
    "nl_condition",
    "orientations",
    "parse_bracketing",
    "parse_canonical_key",
    "quotient_reduce",
    "ra_count",
    "ra_count_c",
    "rb_count",
    "rb_count_c",
    "ring_mul",
    "satisfies_truncation",
    "tensor_cg",
    "validate",
    "verify_sl2",
    "weight_multiplicities",
]
