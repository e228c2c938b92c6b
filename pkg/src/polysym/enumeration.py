"""Closed-form counts and generator enumeration for the two families.

For n = 3m (m > 2) the axial polygons are exactly the walks with sides
(a, b, a) repeated m times, and the circular ones those with sides
(a, b, c) repeated, where a, b, c are congruent to 1 mod 3, lie in
1..3m-2, and the winding number u is coprime to m.  Enumeration works
directly from those arithmetic conditions; the oracle module provides
the independent brute-force counterpart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .polygon_core import SideTuple


class MTooSmall(ValueError):
    """Families are defined only for m > 2."""

    def __init__(self, m: int):
        super().__init__(f"m must be greater than 2, got {m}")
        self.m = m


class NotPrime(ValueError):
    def __init__(self, p: int):
        super().__init__(f"{p} is not an odd prime greater than 3")
        self.p = p


def euler_phi(k: int) -> int:
    """Euler's totient, via trial-division factorization.

    >>> [euler_phi(k) for k in (1, 9, 30)]
    [1, 6, 8]
    """
    if k < 1:
        raise ValueError(f"totient needs a positive integer, got {k}")
    result = k
    d = 2
    while d * d <= k:
        if k % d == 0:
            while k % d == 0:
                k //= d
            result -= result // d
        d += 1 if d == 2 else 2
    if k > 1:
        result -= result // k
    return result


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _check_m(m: int) -> None:
    if m <= 2:
        raise MTooSmall(m)


def _generator_values(m: int) -> range:
    # 1, 4, 7, ..., 3m-2: the residue-1 candidates for one side value
    return range(1, 3 * m - 1, 3)


@dataclass(frozen=True, order=True)
class AxialRep:
    """One axial class: sides (a, b, a) repeated m times, winding number u."""

    m: int
    a: int
    b: int
    u: int

    def __post_init__(self) -> None:
        m, a, b, u = self.m, self.a, self.b, self.u
        _check_m(m)
        for v in (a, b):
            if not (1 <= v <= 3 * m - 2 and v % 3 == 1):
                raise ValueError(f"generator {v} invalid for m={m}")
        if a == b:
            raise ValueError("a and b must differ (equal values are regular)")
        if u != (2 * a + b) // 3 or (2 * a + b) % 3:
            raise ValueError("winding number u must equal (2a+b)/3")
        if math.gcd(u, m) != 1:
            raise ValueError(f"u={u} shares a factor with m={m}")


@dataclass(frozen=True, order=True)
class CircularRep:
    """One circular class: sides (a, b, c) repeated m times.

    (a, b, c) is the lexicographically least of its three cyclic shifts,
    which all describe the same polygon.
    """

    m: int
    a: int
    b: int
    c: int
    u: int

    def __post_init__(self) -> None:
        m, a, b, c, u = self.m, self.a, self.b, self.c, self.u
        _check_m(m)
        for v in (a, b, c):
            if not (1 <= v <= 3 * m - 2 and v % 3 == 1):
                raise ValueError(f"generator {v} invalid for m={m}")
        if len({a, b, c}) != 3:
            raise ValueError("a, b, c must be pairwise distinct")
        if (a, b, c) != min((a, b, c), (b, c, a), (c, a, b)):
            raise ValueError("(a, b, c) must be the least cyclic shift")
        if u != (a + b + c) // 3 or (a + b + c) % 3:
            raise ValueError("winding number u must equal (a+b+c)/3")
        if math.gcd(u, m) != 1:
            raise ValueError(f"u={u} shares a factor with m={m}")


def enumerate_axial(m: int) -> set[AxialRep]:
    """All axial classes for n = 3m; each ordered pair (a, b) is one class."""
    _check_m(m)
    out = set()
    for a in _generator_values(m):
        for b in _generator_values(m):
            if a == b:
                continue
            u = (2 * a + b) // 3
            if math.gcd(u, m) == 1:
                out.add(AxialRep(m, a, b, u))
    return out


def enumerate_circular(m: int) -> set[CircularRep]:
    """All circular classes for n = 3m, one least-shift triple per class."""
    _check_m(m)
    out = set()
    values = _generator_values(m)
    for a in values:
        for b in values:
            if b == a:
                continue
            for c in values:
                if c == a or c == b:
                    continue
                if (a, b, c) != min((a, b, c), (b, c, a), (c, a, b)):
                    continue
                u = (a + b + c) // 3
                if math.gcd(u, m) == 1:
                    out.add(CircularRep(m, a, b, c, u))
    return out


def expand_axial(r: AxialRep) -> SideTuple:
    """The full 3m side tuple (a, b, a, a, b, a, ...) of an axial class."""
    return SideTuple(3 * r.m, (r.a, r.b, r.a) * r.m)


def expand_circular(r: CircularRep) -> SideTuple:
    """The full 3m side tuple (a, b, c, a, b, c, ...) of a circular class."""
    return SideTuple(3 * r.m, (r.a, r.b, r.c) * r.m)


def count_axial(m: int) -> int:
    """Number of axial classes: m * phi(m) - phi(3m) / 2."""
    _check_m(m)
    return m * euler_phi(m) - euler_phi(3 * m) // 2


def count_circular(m: int) -> int:
    """Number of circular classes: (phi(m) * m * (m - 3) + phi(3m)) / 3."""
    _check_m(m)
    num = euler_phi(m) * m * (m - 3) + euler_phi(3 * m)
    if num % 3:
        raise AssertionError(f"count formula not divisible by 3 at m={m}")
    return num // 3


def count_axial_prime(p: int) -> int:
    """Axial count for prime m = p > 3, in its short form (p - 1)^2."""
    if p <= 3 or not _is_prime(p):
        raise NotPrime(p)
    return (p - 1) ** 2


def count_circular_prime(p: int) -> int:
    """Circular count for prime m = p > 3: (p - 1)^2 * (p - 2) / 3."""
    if p <= 3 or not _is_prime(p):
        raise NotPrime(p)
    return (p - 1) ** 2 * (p - 2) // 3


@dataclass(frozen=True)
class CountsRow:
    n: int
    m: int
    p_count: int
    q_count: int


def counts_table(m_from: int, m_to: int) -> list[CountsRow]:
    """Axial and circular class counts for every m in [m_from, m_to]."""
    _check_m(m_from)
    if m_to < m_from:
        raise ValueError(f"empty range {m_from}..{m_to}")
    return [
        CountsRow(3 * m, m, count_axial(m), count_circular(m))
        for m in range(m_from, m_to + 1)
    ]
