"""Certified density bounds for a target pair (m, f).

classify_pair applies a small battery of mechanical rules to a pair
(vertex count m, edge count f) and to its complement (m, tri(m) - f), and
combines them with two literature-grade facts (a universal 2/3 bound off a
finite special set, exactness of 1/r for qualifying minimal clique ranks).
The result is a Verdict: a certified interval for the asymptotic density
of good edge counts, never a computed limit, together with a trace of
every rule that fired.

The special set SPECIAL_PAIRS is closed under complement, so membership
can be tested on the pair as given.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

import numpy as np

from .triangles import decompose_lower, decompose_upper, tri, tri_root

#: The five pairs whose density is exactly 1.
SPECIAL_PAIRS = frozenset({(2, 0), (2, 1), (4, 3), (5, 4), (5, 6)})


@dataclass(frozen=True)
class PairMF:
    """A target pair: induced subgraph order m and edge count f."""

    m: int
    f: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if not 0 <= self.f <= tri(self.m):
            raise ValueError(f"f={self.f} outside [0, {tri(self.m)}] for m={self.m}")

    @property
    def complement_f(self) -> int:
        return tri(self.m) - self.f


@dataclass(frozen=True)
class TraceEntry:
    rule: str                      # "A", "i".."v", or "thm-*" for cited facts
    side: str                      # "f", "complement" or "pair"
    params: tuple = ()             # (name, value) pairs, hashable

    def as_dict(self) -> dict:
        return {"rule": self.rule, "side": self.side, "params": dict(self.params)}


@dataclass(frozen=True)
class Verdict:
    """Certified interval for the density of a pair.

    upper always carries the tightest certified upper bound; rule-only and
    literature-only views are recoverable from the trace (entries whose
    rule id starts with "thm-" are cited facts, the rest are mechanical).
    """

    exact: Optional[Fraction]
    upper: Fraction
    lower: Optional[Fraction]
    trace: tuple[TraceEntry, ...] = field(repr=False)

    def __post_init__(self):
        if not self.trace:
            raise ValueError("verdict trace must be non-empty")
        if self.lower is not None and self.lower > self.upper:
            raise ValueError(f"lower {self.lower} > upper {self.upper}")
        if self.exact is not None and not (self.exact == self.lower == self.upper):
            raise ValueError("exact verdict must collapse the interval")

    def rule_upper(self) -> Fraction:
        """Upper bound certified by the mechanical rules alone."""
        best = Fraction(1)
        for t in self.trace:
            if t.rule == "iv":
                best = min(best, Fraction(0))
            elif t.rule in ("ii", "iii", "v"):
                best = min(best, Fraction(1, 2))
        return best

    def fired(self, rule: str) -> list[TraceEntry]:
        return [t for t in self.trace if t.rule == rule]


# ---------------------------------------------------------------------------
# D(m) membership
# ---------------------------------------------------------------------------

def dm_witness(f: int, m: int) -> Optional[tuple[int, int, int]]:
    """A triple (x, y, z) of non-negative integers with f = x*y + z,
    x + y <= m, and x + y + z <= m - 1 whenever z >= 1; None if no such
    triple exists.

    The witness matches exhaustive enumeration in the order "smallest x
    first, then smallest y >= x", but is found by a jump to the smallest
    x that can possibly work: below the smaller root of x(m-x) = f the
    product x*y never reaches f with enough slack for z.
    """
    if m < 2 or f < 0:
        raise ValueError(f"need m >= 2 and f >= 0, got m={m}, f={f}")
    if f == 0:
        return (0, 0, 0)
    if f <= m - 1:
        return (0, 0, f)
    if f > m * m // 4:
        # x*y <= m^2/4, so z >= f - m^2/4 and x+y+z > m - 1 always
        return None
    disc = m * m - 4 * f
    x_start = max(2, (m - isqrt(disc)) // 2 - 2) if disc >= 0 else 2
    for x in range(x_start, m // 2 + 2):
        if x > m - x:
            break
        y_hi = min(f // x, m - x)
        if y_hi < x:
            continue
        z_hi = f - x * y_hi
        feasible = (z_hi == 0) or (x + y_hi + z_hi <= m - 1)
        if not feasible:
            continue
        # smallest feasible y >= x for this x (brute-force order tie-break)
        best_y = y_hi
        if x >= 2:
            # z >= 1 branch: x + y + (f - x*y) <= m - 1  <=>  y >= ceil((f + x - m + 1)/(x - 1))
            need = f + x - m + 1
            y_lo = max(x, -(-need // (x - 1)))
            if y_lo <= (f - 1) // x and y_lo <= m - x:
                best_y = min(best_y, y_lo)
            if f % x == 0 and x <= f // x <= m - x:
                best_y = min(best_y, f // x)
        z = f - x * best_y
        if z == 0 or x + best_y + z <= m - 1:
            return (x, best_y, z)
    return None


# ---------------------------------------------------------------------------
# Minimal clique rank: smallest r with f a sum of r+1 clique edge counts
# whose vertex counts are positive and sum to m.
# ---------------------------------------------------------------------------

def two_part_witness(m: int, f: int) -> Optional[tuple[int, int]]:
    """(x, m-x) with tri(x) + tri(m-x) = f and both parts >= 1, else None."""
    # tri(x) + tri(m-x) = f  <=>  x^2 - m*x + (tri(m) - f) = 0
    disc = 4 * f - m * (m - 2)
    if disc < 0:
        return None
    s = isqrt(disc)
    if s * s != disc or (m + s) % 2:
        return None
    x = (m + s) // 2
    if 1 <= m - x <= x <= m - 1:
        return (x, m - x)
    return None


def _np_square_roots(vals: np.ndarray) -> np.ndarray:
    """Exact integer square roots where vals is a perfect square, else -1."""
    out = np.full(vals.shape, -1, dtype=np.int64)
    nonneg = vals >= 0
    approx = np.sqrt(vals[nonneg].astype(np.float64))
    base = np.floor(approx).astype(np.int64)
    found = np.full(base.shape, -1, dtype=np.int64)
    target = vals[nonneg]
    for delta in (-1, 0, 1):
        cand = base + delta
        ok = (cand >= 0) & (cand * cand == target)
        found[ok] = cand[ok]
    out[nonneg] = found
    return out


def three_part_witness(m: int, f: int, *, chunk: int = 1 << 20) -> Optional[tuple[int, int, int]]:
    """(x, y, z) with x >= y >= z >= 1, x+y+z = m, tri sums to f; else None.

    Scans the smallest part z and resolves the rest with the two-part
    closed form; vectorized so that m in the tens of millions stays fast.
    """
    if m < 3:
        return None
    for z0 in range(1, m // 3 + 1, chunk):
        z = np.arange(z0, min(z0 + chunk, m // 3 + 1), dtype=np.int64)
        rest_f = f - z * (z - 1) // 2
        rest_m = m - z
        disc = 4 * rest_f - rest_m * (rest_m - 2)
        roots = _np_square_roots(disc)
        ok = (roots >= 0) & ((rest_m + roots) % 2 == 0)
        if not ok.any():
            continue
        for zi in z[ok]:
            zi = int(zi)
            w = two_part_witness(m - zi, f - tri(zi))
            if w is not None and w[1] >= zi:
                return (w[0], w[1], zi)
    return None


def _parts_min_edges(v: int, j: int) -> int:
    q, rem = divmod(v, j)
    return (j - rem) * tri(q) + rem * tri(q + 1)


def _parts_max_edges(v: int, j: int, cap: int) -> int:
    if cap <= 1:
        return 0
    t = min(j, (v - j) // (cap - 1))
    rest = j - t
    if rest == 0:
        return t * tri(cap)
    big = v - t * cap - (rest - 1)
    return t * tri(cap) + tri(big)


def _exists_rep(f: int, v: int, j: int, cap: int) -> bool:
    """Partition of v into exactly j parts in [1, cap] with edge sum f?"""
    if j == 0:
        return v == 0 and f == 0
    if v < j or f < 0:
        return False
    if j == 1:
        return v <= cap and tri(v) == f
    if f < _parts_min_edges(v, j) or f > _parts_max_edges(v, j, cap):
        return False
    if j == 2:
        w = two_part_witness(v, f)
        return w is not None and w[0] <= cap
    hi = min(cap, v - (j - 1))
    for a in range(hi, -(-v // j) - 1, -1):
        if _exists_rep(f - tri(a), v - a, j - 1, a):
            return True
    return False


def min_r(m: int, f: int) -> Optional[int]:
    """Smallest r >= 0 such that f is a sum of r+1 clique edge counts with
    positive vertex counts summing to m; None when no representation exists.

    Equals (min k with f in C(m, k)) - 1, since empty parts are removable.
    """
    PairMF(m, f)
    if f == tri(m):
        return 0
    if two_part_witness(m, f) is not None:
        return 1
    if three_part_witness(m, f) is not None:
        return 2
    for j in range(4, m + 1):
        if _exists_rep(f, m, j, m):
            return j - 1
    return None


def min_r_witness(m: int, f: int) -> Optional[tuple[int, ...]]:
    """A partition realizing min_r(m, f), nonincreasing; None if absent."""
    PairMF(m, f)
    if f == tri(m):
        return (m,)
    w2 = two_part_witness(m, f)
    if w2 is not None:
        return w2
    w3 = three_part_witness(m, f)
    if w3 is not None:
        return w3
    for j in range(4, m + 1):
        parts: list[int] = []
        ff, vv, jj, cap = f, m, j, m
        while jj and _exists_rep(ff, vv, jj, cap):
            if jj == 1:
                parts.append(vv)
                break
            hi = min(cap, vv - (jj - 1))
            for a in range(hi, 0, -1):
                if _exists_rep(ff - tri(a), vv - a, jj - 1, a):
                    parts.append(a)
                    ff, vv, jj, cap = ff - tri(a), vv - a, jj - 1, a
                    break
        if parts and sum(parts) == m and sum(tri(p) for p in parts) == f:
            return tuple(parts)
    return None


# ---------------------------------------------------------------------------
# Triple-identity report (triangular twice over, and a product form)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TripleIdentity:
    a: int
    b: int
    c: int


def triple_identity(m: int, f: int) -> Optional[TripleIdentity]:
    """Positive (a, b, c) with f = tri(a) = tri(m) - tri(b) = c(m - c),
    or None; c is the smaller positive root when two exist."""
    PairMF(m, f)
    a = tri_root(f)
    if a is None:
        return None
    b = tri_root(tri(m) - f)
    if b is None:
        return None
    disc = m * m - 4 * f
    if disc < 0:
        return None
    s = isqrt(disc)
    if s * s != disc:
        return None
    c = None
    for cand in ((m - s) // 2, (m + s) // 2):
        if (m - s) % 2 == 0 and cand >= 1 and cand * (m - cand) == f:
            c = cand
            break
    if c is None:
        return None
    return TripleIdentity(a=a, b=b, c=c)


# ---------------------------------------------------------------------------
# The verdict engine
# ---------------------------------------------------------------------------

def _window(m: int) -> tuple[int, int]:
    return (m - 1) ** 2 // 4, m * m // 4


def classify_pair(m: int, f: int) -> Verdict:
    """Evaluate every certification rule on (m, f) and its complement and
    return the resulting verdict with a full trace."""
    pair = PairMF(m, f)
    fc = pair.complement_f
    trace: list[TraceEntry] = []
    sides = (("f", f), ("complement", fc))

    if (m, f) in SPECIAL_PAIRS:
        trace.append(TraceEntry("A", "pair", (("m", m), ("f", f))))
        one = Fraction(1)
        return Verdict(exact=one, upper=one, lower=one, trace=tuple(trace))

    complement_used = False

    # rule (iv): decompose upward; excess at least m - ell forces density 0
    exact_zero = False
    for side, g in sides:
        dec = decompose_upper(g)
        if dec.ell < m and dec.ellp >= m - dec.ell:
            trace.append(TraceEntry("iv", side, (("l", dec.ell), ("lp", dec.ellp))))
            exact_zero = True
            complement_used |= side == "complement"

    # rules (ii), (iii), (v): each caps the density at 1/2
    half = False
    wlo, whi = _window(m)
    for side, g in sides:
        if not wlo <= g <= whi:
            trace.append(TraceEntry("ii", side, (("f", g), ("window", (wlo, whi)))))
            half = True
            complement_used |= side == "complement"
        if g >= 1:
            dec = decompose_lower(g)
            if 2 * dec.bp > dec.b and dec.bp < dec.b - 1:
                trace.append(TraceEntry("iii", side, (("b", dec.b), ("bp", dec.bp))))
                half = True
                complement_used |= side == "complement"
        if dm_witness(g, m) is None:
            trace.append(TraceEntry("v", side, (("f", g),)))
            half = True
            complement_used |= side == "complement"

    # lower bounds / exactness from the minimal clique rank, on either side
    exact_val: Optional[Fraction] = None
    lower: Optional[Fraction] = None
    for side, g in sides:
        rep = triple_identity(m, g)
        if rep is None:
            continue
        r = min_r(m, g)
        if r is None or r < 2:
            continue
        params = (("r", r), ("a", rep.a), ("b", rep.b), ("c", rep.c))
        if r == 2 or r >= 5:
            trace.append(TraceEntry("thm-exact-1/r", side, params))
            val = Fraction(1, r)
            if exact_val is not None and exact_val != val:
                raise AssertionError(f"conflicting exact values for ({m},{f})")
            exact_val = val
        else:
            trace.append(TraceEntry("thm-lower-1/r", side, params))
            lower = max(lower or Fraction(0), Fraction(1, r))
        complement_used |= side == "complement"

    if complement_used:
        trace.insert(0, TraceEntry("i", "pair", (("f", f), ("complement", fc))))

    if exact_zero:
        if exact_val is not None or lower is not None:
            raise AssertionError(f"rule (iv) zero conflicts with a positive lower bound for ({m},{f})")
        zero = Fraction(0)
        return Verdict(exact=zero, upper=zero, lower=zero, trace=tuple(trace))

    upper = Fraction(1, 2) if half else Fraction(2, 3)
    if not half:
        trace.append(TraceEntry("thm-upper-2/3", "pair", ()))
    # universal literature bound off the special set, recorded but separate
    trace.append(TraceEntry("thm-upper-1/2", "pair", ()))

    if exact_val is not None:
        if exact_val > upper:
            raise AssertionError(f"exact {exact_val} above certified upper {upper} for ({m},{f})")
        return Verdict(exact=exact_val, upper=exact_val, lower=exact_val, trace=tuple(trace))
    return Verdict(exact=None, upper=upper, lower=lower, trace=tuple(trace))
