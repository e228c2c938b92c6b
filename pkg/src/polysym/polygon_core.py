"""Side-tuple arithmetic for closed polygonal walks on circle vertices.

A polygon on ``n`` vertices (labelled 0..n-1, equally spaced on a circle,
counterclockwise) is encoded by its side tuple ``(e_1, ..., e_n)``: step i
advances ``e_i`` vertex positions counterclockwise.  The walk starts at
vertex 0, must visit every vertex exactly once, and returns to vertex 0 on
the final step.  All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class InvalidSideTuple(ValueError):
    """A side tuple failed basic well-formedness checks."""


class WalkError(ValueError):
    """Base class for walk validation failures."""


class PrematureClosure(WalkError):
    """The walk returned to an already-visited vertex before the last step.

    ``index`` is the 1-based step at which the revisit happened.
    """

    def __init__(self, index: int):
        super().__init__(f"premature closure at i={index}")
        self.index = index


class NotClosed(WalkError):
    """The walk used all n sides but did not end at vertex 0."""

    def __init__(self, final_vertex: int):
        super().__init__(f"walk ends at vertex {final_vertex}, not at 0")
        self.final_vertex = final_vertex


@dataclass(frozen=True)
class SideTuple:
    """An n-vertex polygon candidate given by its n side lengths."""

    n: int
    sides: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InvalidSideTuple(f"need at least 3 vertices, got n={self.n}")
        if len(self.sides) != self.n:
            raise InvalidSideTuple(
                f"expected {self.n} sides, got {len(self.sides)}"
            )
        for e in self.sides:
            if not 1 <= e <= self.n - 1:
                raise InvalidSideTuple(
                    f"side {e} outside valid range 1..{self.n - 1}"
                )


@dataclass(frozen=True)
class VertexCycle:
    """The vertex visiting order of a valid walk, starting at vertex 0."""

    n: int
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.vertices[0] != 0:
            raise ValueError("vertex cycle must start at 0")
        if sorted(self.vertices) != list(range(self.n)):
            raise ValueError("vertex cycle must visit every vertex exactly once")


@dataclass(frozen=True)
class EdgeSet:
    """The n chords of a polygon, as unordered vertex pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if len(self.edges) != self.n:
            raise ValueError(f"expected {self.n} edges, got {len(self.edges)}")
        degree = [0] * self.n
        for p, q in self.edges:
            if not (0 <= p < q < self.n):
                raise ValueError(f"malformed edge ({p}, {q})")
            degree[p] += 1
            degree[q] += 1
        if any(d != 2 for d in degree):
            raise ValueError("every vertex must have degree 2")


@dataclass(frozen=True)
class SymmetryProfile:
    """Order of the rotation stabilizer and number of mirror axes."""

    rotation_order: int
    axis_count: int

    def __post_init__(self) -> None:
        if self.rotation_order < 1:
            raise ValueError("rotation order is at least 1 (identity)")
        # The stabilizer inside the dihedral group is cyclic or dihedral,
        # so a polygon has either no axes or exactly rotation_order of them.
        if self.axis_count not in (0, self.rotation_order):
            raise ValueError(
                f"axis count {self.axis_count} incompatible with "
                f"rotation order {self.rotation_order}"
            )


def prefix_sums(t: SideTuple) -> list[int]:
    """Plain (unreduced) running sums s_1..s_n of the sides.

    >>> prefix_sums(SideTuple(6, (1, 2, 1, 4, 3, 1)))
    [1, 3, 4, 8, 11, 12]
    """
    return list(itertools.accumulate(t.sides))


def validate_walk(t: SideTuple) -> VertexCycle:
    """Run the walk and return its vertex order, or raise a WalkError.

    The walk is a polygon exactly when the n partial positions are
    pairwise distinct and the final step returns to vertex 0.  In
    particular no prefix sum s_i with i < n may be divisible by n.
    Raises PrematureClosure at the first step that revisits any vertex,
    NotClosed if the last step misses vertex 0.
    """
    n = t.n
    seen = bytearray(n)
    seen[0] = 1
    pos = 0
    vertices = [0]
    for i in range(n - 1):
        pos = (pos + t.sides[i]) % n
        if seen[pos]:
            raise PrematureClosure(i + 1)
        seen[pos] = 1
        vertices.append(pos)
    final = (pos + t.sides[n - 1]) % n
    if final != 0:
        raise NotClosed(final)
    return VertexCycle(n, tuple(vertices))


def revolutions(t: SideTuple) -> int:
    """How many times the valid walk winds around the circle: sum(sides)/n."""
    validate_walk(t)
    return sum(t.sides) // t.n


def edge_set(c: VertexCycle) -> EdgeSet:
    """The unordered chord set of a vertex cycle."""
    n = c.n
    edges = set()
    for i in range(n):
        p, q = c.vertices[i], c.vertices[(i + 1) % n]
        edges.add((p, q) if p < q else (q, p))
    return EdgeSet(n, frozenset(edges))


def rotate_edges(e: EdgeSet, k: int) -> EdgeSet:
    """Rotate every edge by k vertex positions counterclockwise."""
    n = e.n
    if not 0 <= k < n:
        raise ValueError(f"rotation offset {k} outside 0..{n - 1}")
    out = set()
    for p, q in e.edges:
        a, b = (p + k) % n, (q + k) % n
        out.add((a, b) if a < b else (b, a))
    return EdgeSet(n, frozenset(out))


def reflect_edges(e: EdgeSet, axis: int) -> EdgeSet:
    """Reflect every edge in the mirror v -> (axis - v) mod n.

    Axis indices axis and axis + n describe the same mirror map, so the
    polygon has exactly n distinct mirrors; indices up to 2n - 1 are
    accepted for convenience.  The mirror line passes through angle
    pi * axis / n.
    """
    n = e.n
    if not 0 <= axis < 2 * n:
        raise ValueError(f"axis index {axis} outside 0..{2 * n - 1}")
    out = set()
    for p, q in e.edges:
        a, b = (axis - p) % n, (axis - q) % n
        out.add((a, b) if a < b else (b, a))
    return EdgeSet(n, frozenset(out))


def symmetry_profile(e: EdgeSet) -> SymmetryProfile:
    """Scan all n rotations and all n mirrors that fix the edge set."""
    n = e.n
    rot = sum(1 for k in range(n) if rotate_edges(e, k) == e)
    axes = sum(1 for a in range(n) if reflect_edges(e, a) == e)
    return SymmetryProfile(rot, axes)


def cyclic_shift(t: SideTuple, k: int) -> SideTuple:
    """The side tuple read starting k steps later along the same walk."""
    k %= t.n
    return SideTuple(t.n, t.sides[k:] + t.sides[:k])


def reversed_complement(t: SideTuple) -> SideTuple:
    """The same polygon traversed in the opposite direction.

    >>> reversed_complement(SideTuple(9, (1, 4, 7) * 3)).sides
    (2, 5, 8, 2, 5, 8, 2, 5, 8)
    """
    return SideTuple(t.n, tuple(t.n - e for e in reversed(t.sides)))


def canonical_form(t: SideTuple) -> SideTuple:
    """Lexicographically least side tuple describing the same polygon.

    Candidates are the n cyclic shifts of the walk and the n cyclic
    shifts of its reversed complement (opposite traversal direction).
    Two valid side tuples describe the same chord set, up to choice of
    start vertex and direction, exactly when their canonical forms are
    equal.  Distinct rotated copies of a polygon are *not* identified.
    Raises a WalkError if the tuple is not a valid polygon.
    """
    validate_walk(t)
    n = t.n
    doubled = t.sides + t.sides
    best = min(doubled[i : i + n] for i in range(n))
    rc = tuple(n - e for e in reversed(t.sides))
    doubled = rc + rc
    rc_best = min(doubled[i : i + n] for i in range(n))
    return SideTuple(n, min(best, rc_best))


def canonical_period3(n: int, block: tuple[int, int, int]) -> tuple[int, ...]:
    """canonical_form of the 3-periodic tuple block * (n // 3), as a tuple.

    Every cyclic shift of a 3-periodic tuple is again 3-periodic, as is
    its reversed complement, so the minimum over 2n full-length
    candidates is the minimum over at most six length-3 blocks.
    """
    if n % 3:
        raise ValueError(f"n={n} is not a multiple of 3")
    a, b, c = block
    best = min(
        (a, b, c),
        (b, c, a),
        (c, a, b),
        (n - c, n - b, n - a),
        (n - b, n - a, n - c),
        (n - a, n - c, n - b),
    )
    return best * (n // 3)


def period3_profile(n: int, block: tuple[int, int, int]) -> SymmetryProfile:
    """symmetry_profile of the valid polygon with sides block * (n // 3).

    A symmetry of the chord set matches the side sequence against a
    cyclic shift of one of four sequences: itself or its reversed
    complement (rotations), its plain complement or plain reversal
    (mirrors).  For a 3-periodic sequence each comparison reduces to
    membership among the three cyclic shifts of a length-3 block, and
    each matching shift class accounts for n/3 group elements.  The
    caller must pass the block of a *valid* walk; the count is wrong for
    tuples that do not describe a polygon.
    """
    if n % 3:
        raise ValueError(f"n={n} is not a multiple of 3")
    m = n // 3
    a, b, c = block
    if a == b == c:
        return SymmetryProfile(n, n)
    t = (a, b, c)
    rot = m
    if t in ((n - c, n - b, n - a), (n - b, n - a, n - c), (n - a, n - c, n - b)):
        rot += m
    axes = 0
    if t in ((n - a, n - b, n - c), (n - b, n - c, n - a), (n - c, n - a, n - b)):
        axes += m
    if t in ((c, b, a), (b, a, c), (a, c, b)):
        axes += m
    return SymmetryProfile(rot, axes)
