"""Triangular-number arithmetic and the two canonical decompositions of an edge count.

Every clique on x vertices spans tri(x) = x(x-1)/2 edges, so sums and
differences of triangular numbers are the basic currency of everything in
this package.  The two decompositions expose an edge count f either as
"largest triangular number below, plus excess" or as "smallest triangular
number above, minus deficit"; both are unique in the stated ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


def tri(x: int) -> int:
    """Edge count of a clique on x vertices: x(x-1)/2."""
    return x * (x - 1) // 2


def tri_root(f: int) -> int | None:
    """The x >= 1 with tri(x) == f, or None when f is not triangular.

    tri(1) = tri(0) = 0; the root is reported as 1 so that it always
    describes a usable (non-empty) clique.
    """
    if f < 0:
        return None
    if f == 0:
        return 1
    x = (1 + isqrt(1 + 8 * f)) // 2
    return x if tri(x) == f else None


def is_square(v: int) -> bool:
    if v < 0:
        return False
    r = isqrt(v)
    return r * r == v


@dataclass(frozen=True)
class UpperDecomp:
    """f = tri(ell) + ellp with 0 <= ellp < ell."""

    ell: int
    ellp: int

    def value(self) -> int:
        return tri(self.ell) + self.ellp


@dataclass(frozen=True)
class LowerDecomp:
    """f = tri(b) - bp with 0 <= bp < b - 1."""

    b: int
    bp: int

    def value(self) -> int:
        return tri(self.b) - self.bp


def decompose_upper(f: int) -> UpperDecomp:
    """Unique (ell, ellp) with f = tri(ell) + ellp and 0 <= ellp < ell.

    f = 0 yields (1, 0): the largest x with tri(x) <= 0 is taken as 1.
    """
    if f < 0:
        raise ValueError(f"edge count must be non-negative, got {f}")
    if f == 0:
        return UpperDecomp(1, 0)
    ell = (1 + isqrt(1 + 8 * f)) // 2
    # floating-free correction: want the largest ell with tri(ell) <= f
    while tri(ell + 1) <= f:
        ell += 1
    while tri(ell) > f:
        ell -= 1
    return UpperDecomp(ell, f - tri(ell))


def decompose_lower(f: int) -> LowerDecomp:
    """Unique (b, bp) with f = tri(b) - bp and 0 <= bp < b - 1.

    Requires f >= 1: for f = 0 no pair satisfies the range constraint, so
    the value is rejected rather than given an artificial convention.
    """
    if f < 1:
        raise ValueError(f"decompose_lower needs f >= 1, got {f}")
    b = (1 + isqrt(1 + 8 * f)) // 2
    while tri(b) < f:
        b += 1
    while b > 2 and tri(b - 1) >= f:
        b -= 1
    dec = LowerDecomp(b, tri(b) - f)
    assert 0 <= dec.bp < dec.b - 1
    return dec
