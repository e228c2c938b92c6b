"""Symmetric polygons on 3m circle vertices: counts, classes, proofs-by-search.

The package studies closed walks that visit all n = 3m points on a
circle exactly once.  Two families with m-fold symmetry are enumerated
in closed form (mirror-symmetric and rotation-only), and two
independent brute-force oracles re-derive every count so the formulas
can be checked rather than trusted.
"""

from .classification import Family, FamilyTag, classify, side_period
from .enumeration import (
    AxialRep,
    CircularRep,
    CountsRow,
    MTooSmall,
    NotPrime,
    count_axial,
    count_axial_prime,
    count_circular,
    count_circular_prime,
    counts_table,
    enumerate_axial,
    enumerate_circular,
    euler_phi,
    expand_axial,
    expand_circular,
)
from .oracle import (
    IdentityCheck,
    NTooLarge,
    NTooSmall,
    OracleReport,
    VerificationError,
    census_full,
    sweep_period3,
    theorem_axial_classes,
    theorem_circular_classes,
    verify_identity,
    verify_theorem_gcd,
)
from .polygon_core import (
    EdgeSet,
    InvalidSideTuple,
    NotClosed,
    PrematureClosure,
    SideTuple,
    SymmetryProfile,
    VertexCycle,
    WalkError,
    canonical_form,
    canonical_period3,
    cyclic_shift,
    edge_set,
    period3_profile,
    prefix_sums,
    reflect_edges,
    reversed_complement,
    revolutions,
    rotate_edges,
    symmetry_profile,
    validate_walk,
)
from .render import RenderOptions, caption_for, gallery_svg, polygon_svg

__version__ = "0.1.0"

__all__ = [
    "AxialRep",
    "CircularRep",
    "CountsRow",
    "EdgeSet",
    "Family",
    "FamilyTag",
    "IdentityCheck",
    "InvalidSideTuple",
    "MTooSmall",
    "NTooLarge",
    "NTooSmall",
    "NotClosed",
    "NotPrime",
    "OracleReport",
    "PrematureClosure",
    "RenderOptions",
    "SideTuple",
    "SymmetryProfile",
    "VerificationError",
    "VertexCycle",
    "WalkError",
    "canonical_form",
    "canonical_period3",
    "caption_for",
    "census_full",
    "classify",
    "count_axial",
    "count_axial_prime",
    "count_circular",
    "count_circular_prime",
    "counts_table",
    "cyclic_shift",
    "edge_set",
    "enumerate_axial",
    "enumerate_circular",
    "euler_phi",
    "expand_axial",
    "expand_circular",
    "gallery_svg",
    "period3_profile",
    "polygon_svg",
    "prefix_sums",
    "reflect_edges",
    "reversed_complement",
    "revolutions",
    "rotate_edges",
    "side_period",
    "sweep_period3",
    "symmetry_profile",
    "theorem_axial_classes",
    "theorem_circular_classes",
    "validate_walk",
    "verify_identity",
    "verify_theorem_gcd",
]
