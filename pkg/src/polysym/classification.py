"""Assign a polygon to a symmetry family from its geometric stabilizer."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .polygon_core import SideTuple, edge_set, symmetry_profile, validate_walk


class FamilyTag(str, Enum):
    REGULAR = "regular"
    AXIAL = "axial"
    CIRCULAR = "circular"
    OTHER = "other"


@dataclass(frozen=True)
class Family:
    """Symmetry family of a polygon; m = n/3 is set for axial/circular."""

    tag: FamilyTag
    m: int | None = None

    def __post_init__(self) -> None:
        needs_m = self.tag in (FamilyTag.AXIAL, FamilyTag.CIRCULAR)
        if needs_m != (self.m is not None):
            raise ValueError(f"family {self.tag.value} and m={self.m} mismatch")

    @property
    def label(self) -> str:
        name = self.tag.value.capitalize()
        return f"{name}({self.m})" if self.m is not None else name


def classify(t: SideTuple) -> Family:
    """Family of a valid polygon, decided purely from its symmetries.

    * regular: mirror axes through all n positions (full dihedral group);
    * axial: n = 3m with m > 2 and exactly m mirror axes;
    * circular: n = 3m with m > 2, no mirror axes, and rotation
      stabilizer of order exactly m;
    * other: everything else.

    Walk validation errors propagate.
    """
    profile = symmetry_profile(edge_set(validate_walk(t)))
    n = t.n
    if profile.axis_count == n:
        return Family(FamilyTag.REGULAR)
    if n % 3 == 0:
        m = n // 3
        if m > 2:
            if profile.axis_count == m:
                return Family(FamilyTag.AXIAL, m)
            if profile.axis_count == 0 and profile.rotation_order == m:
                return Family(FamilyTag.CIRCULAR, m)
    return Family(FamilyTag.OTHER)


def side_period(t: SideTuple) -> int:
    """Smallest p dividing n such that the sides repeat with period p."""
    n = t.n
    s = t.sides
    for p in range(1, n + 1):
        if n % p == 0 and all(s[i] == s[i % p] for i in range(p, n)):
            return p
    raise AssertionError("unreachable: period n always matches")
