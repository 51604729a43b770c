"""The x^2 - 7y^2 = -3 solution family and the derived pairs of density 1/2.

Solutions grow from the seed (2, 1) under (x, y) -> (8x + 21y, 3x + 8y);
at even generation indices x is even and y odd, which makes
t = y - 1 an even integer with 7t^2 + 14t + 4 a perfect square.  Each such
t yields a pair m = 5t + 2, f = tri(3t + 1) satisfying the three-identity
report of certify.triple_identity with minimal clique rank 2.

Everything here runs in exact big-integer arithmetic; t roughly
multiplies by a thousand per index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .triangles import tri

_C_SCAN_CHUNK = 1 << 20
DEFAULT_C_LIMIT = 10 ** 7


class SkippedExhaustive(Exception):
    """The two-clique exhaustive scan was not run because m exceeds the limit."""


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    k: int

    def __post_init__(self):
        if self.x * self.x - 7 * self.y * self.y != -3:
            raise ValueError(f"({self.x}, {self.y}) does not satisfy x^2 - 7y^2 = -3")


def pell_solutions(k_max: int) -> list[PellSolution]:
    """Solutions (x_0, y_0) .. (x_k_max, y_k_max) from seed (2, 1)."""
    if k_max < 0:
        raise ValueError(f"need k_max >= 0, got {k_max}")
    out = [PellSolution(2, 1, 0)]
    for k in range(1, k_max + 1):
        x, y = out[-1].x, out[-1].y
        out.append(PellSolution(8 * x + 21 * y, 3 * x + 8 * y, k))
    return out


@dataclass(frozen=True)
class FamilyPair:
    k: int
    t: int
    m: int
    f: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.m != 5 * self.t + 2 or self.f != tri(3 * self.t + 1):
            raise ValueError("pair does not match its parameter t")
        if self.f != tri(self.a):
            raise ValueError("identity f = tri(a) fails")
        if self.f != tri(self.m) - tri(self.b):
            raise ValueError("identity f = tri(m) - tri(b) fails")
        if self.f != self.c * (self.m - self.c):
            raise ValueError("identity f = c(m - c) fails")

    def triple_witness(self) -> tuple[int, int, int]:
        """Three clique sizes summing to m whose edge counts sum to f."""
        return (2 * self.t + 1, 2 * self.t + 1, self.t)


def family_pair(k: int) -> FamilyPair:
    """The k-th derived pair; k >= 1 (k = 0 degenerates to m = 2)."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    sol = pell_solutions(2 * k)[2 * k]
    if sol.x % 2 or sol.y % 2 == 0:
        raise AssertionError(f"index {2 * k}: expected x even and y odd, got {sol}")
    t = sol.y - 1
    m = 5 * t + 2
    return FamilyPair(
        k=k, t=t, m=m, f=tri(3 * t + 1),
        a=3 * t + 1, b=4 * t + 2, c=(m - sol.x) // 2,
    )


def scan_two_clique_partitions(m: int, f: int) -> tuple[int | None, int]:
    """Exhaustively scan y1 in [1, m//2] for tri(y1) + tri(m - y1) == f.

    Returns (first matching y1 or None, number of values scanned).  This
    is the brute-force audit route; the algebraic route lives in
    certify.two_part_witness.
    """
    scanned = 0
    for start in range(1, m // 2 + 1, _C_SCAN_CHUNK):
        y1 = np.arange(start, min(start + _C_SCAN_CHUNK, m // 2 + 1), dtype=np.int64)
        vals = y1 * (y1 - 1) // 2 + (m - y1) * (m - y1 - 1) // 2
        hits = np.flatnonzero(vals == f)
        scanned += len(y1)
        if hits.size:
            scanned = int(y1[hits[0]])  # scanned up to the hit
            return int(y1[hits[0]]), scanned
    return None, scanned


@dataclass(frozen=True)
class ABCReport:
    pair: FamilyPair
    a_ok: bool
    b_ok: bool
    b_witness: tuple[int, int, int]
    c_ok: bool
    c_scanned: int

    @property
    def all_ok(self) -> bool:
        return self.a_ok and self.b_ok and self.c_ok


def verify_ABC(pair: FamilyPair, exhaustive_c_limit: int = DEFAULT_C_LIMIT) -> ABCReport:
    """Re-verify the three defining properties of a family pair:

    (A) the triple identity f = tri(a) = tri(m) - tri(b) = c(m - c);
    (B) an explicit three-clique representation;
    (C) no two-clique representation, confirmed by exhaustive scan.

    Raises SkippedExhaustive instead of silently passing when m exceeds
    the scan limit; rerun with a higher limit to complete (C).
    """
    m, f = pair.m, pair.f
    if m > exhaustive_c_limit:
        raise SkippedExhaustive(
            f"m={m} exceeds exhaustive_c_limit={exhaustive_c_limit}; "
            "pass a larger limit to run property (C)"
        )
    a_ok = f == tri(pair.a) == tri(m) - tri(pair.b) == pair.c * (m - pair.c)
    w = pair.triple_witness()
    b_ok = sum(w) == m and sum(tri(q) for q in w) == f and all(q >= 1 for q in w)
    hit, scanned = scan_two_clique_partitions(m, f)
    return ABCReport(pair=pair, a_ok=a_ok, b_ok=b_ok, b_witness=w,
                     c_ok=hit is None, c_scanned=scanned)
