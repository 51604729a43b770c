"""Exact edge spectra of disjoint clique unions.

spectrum(n, r) computes the set of edge counts realizable by an n-vertex
graph that is a disjoint union of at most r cliques.  The computation is a
layered reachability DP over states (vertices used, edge sum): layer k
holds, for each vertex budget v, the bitmask of edge sums reachable with at
most k parts.  Rows are Python integers used as bit-vectors, so membership,
counting and shifting are single big-int operations.

Only two layers are alive at a time in the streaming paths; the
witness-recovery path retains all layers and is therefore kept behind the
same memory guard.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .triangles import tri

ENV_MAX_TABLE_BITS = "EDGESPECTRA_MAX_TABLE_BITS"
_DEFAULT_MAX_TABLE_BITS = 8_000_000_000  # ~1 GB of row storage


class SpectrumMemoryError(Exception):
    """Requested DP tables exceed the configured memory cap."""


def _max_table_bits(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(ENV_MAX_TABLE_BITS)
    return int(env) if env else _DEFAULT_MAX_TABLE_BITS


@dataclass(frozen=True)
class CliquePartition:
    """Multiset of clique sizes; canonical form is nonincreasing."""

    parts: tuple[int, ...]
    n: int

    def __post_init__(self):
        if sum(self.parts) != self.n:
            raise ValueError(f"parts {self.parts} do not sum to n={self.n}")
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    def edge_sum(self) -> int:
        return sum(tri(p) for p in self.parts)


@dataclass(frozen=True)
class EdgeSpectrum:
    """Membership table over edge counts 0..n(n-1)/2, packed into one int."""

    n: int
    r: int | None
    mask: int = field(repr=False)

    def __contains__(self, e: int) -> bool:
        return 0 <= e <= tri(self.n) and bool((self.mask >> e) & 1)

    def members(self) -> list[int]:
        mask, out, e = self.mask, [], 0
        while mask:
            low = mask & -mask
            e = low.bit_length() - 1
            out.append(e)
            mask ^= low
        return out

    @property
    def count(self) -> int:
        return self.mask.bit_count()

    @property
    def min_element(self) -> int:
        if self.mask == 0:
            raise ValueError("empty spectrum")
        return (self.mask & -self.mask).bit_length() - 1

    @property
    def max_element(self) -> int:
        if self.mask == 0:
            raise ValueError("empty spectrum")
        return self.mask.bit_length() - 1

    def export_lines(self) -> list[str]:
        """Line format: a JSON header, then one decimal member per line."""
        import json

        empty = self.mask == 0
        header = json.dumps(
            {"n": self.n, "r": self.r, "count": self.count,
             "min": None if empty else self.min_element,
             "max": None if empty else self.max_element}
        )
        return [header] + [str(e) for e in self.members()]

    @classmethod
    def from_members(cls, n: int, r: int | None, members) -> "EdgeSpectrum":
        mask = 0
        cap = tri(n)
        for e in members:
            if not 0 <= e <= cap:
                raise ValueError(f"edge count {e} outside [0, {cap}]")
            mask |= 1 << e
        return cls(n=n, r=r, mask=mask)

    @classmethod
    def parse_export(cls, lines) -> "EdgeSpectrum":
        import json

        it = iter(lines)
        header = json.loads(next(it))
        spec = cls.from_members(header["n"], header.get("r"), (int(s) for s in it))
        if spec.count != header["count"]:
            raise ValueError("member count disagrees with header")
        return spec


def bounded_partitions(n: int, max_parts: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n into at most max_parts positive parts, nonincreasing."""
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    hi = n if max_part is None else min(n, max_part)
    for first in range(hi, 0, -1):
        if first * max_parts < n:
            break
        for rest in bounded_partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def _layer_caps(n: int, r: int) -> list[int]:
    """Vertex budget still reachable at layer k when targeting (n, r).

    Layer k (at most k parts) is queried only for budgets v <= n*k/r,
    because each higher layer peels off a largest part of at least a 1/k
    fraction of its budget.
    """
    return [0] + [(n * k) // r for k in range(1, r)] + [n]


def _check_cap(bits_estimate: int, cap_bits: int | None):
    limit = _max_table_bits(cap_bits)
    if bits_estimate > limit:
        raise SpectrumMemoryError(
            f"DP tables need ~{bits_estimate} bits, cap is {limit} "
            f"(raise via {ENV_MAX_TABLE_BITS} or max_table_bits=)"
        )


def _estimate_bits(caps: list[int]) -> int:
    # two live layers: the two largest row sets
    per_layer = [sum(tri(v) + 1 for v in range(c + 1)) for c in caps]
    per_layer.sort()
    return sum(per_layer[-2:]) + (tri(caps[-1]) + 1)


def spectrum(n: int, r: int, *, max_table_bits: int | None = None) -> EdgeSpectrum:
    """Exact C(n, r): edge sums of unions of at most r cliques on n vertices."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    k_eff = min(r, max(n, 1))  # more than n parts only adds empty cliques
    caps = _layer_caps(n, k_eff)
    _check_cap(_estimate_bits(caps), max_table_bits)

    if k_eff == 1:
        return EdgeSpectrum(n=n, r=r, mask=1 << tri(n))
    prev = [1 << tri(v) for v in range(caps[1] + 1)]  # layer 1
    for k in range(2, k_eff):
        cap = caps[k]
        cur = [0] * (cap + 1)
        for v in range(cap + 1):
            row = 0
            # largest part first: a >= ceil(v/k) covers every partition once
            for a in range(-(-v // k), v + 1):
                row |= prev[v - a] << tri(a)
            cur[v] = row
        prev = cur
    out = 0
    for a in range(-(-n // k_eff), n + 1):
        out |= prev[n - a] << tri(a)
    return EdgeSpectrum(n=n, r=r, mask=out)


@lru_cache(maxsize=6)
def _witness_tables(n: int, r: int, max_table_bits: int | None = None) -> list[list[int]]:
    """Full per-layer tables C(v, k) for v <= n, k <= r, for backtracking."""
    per_layer_bits = sum(tri(v) + 1 for v in range(n + 1))
    _check_cap(per_layer_bits * r, max_table_bits)
    layers = [[1 << tri(v) for v in range(n + 1)]]
    for k in range(2, r + 1):
        prevl = layers[-1]
        cur = [0] * (n + 1)
        for v in range(n + 1):
            row = 0
            for a in range(-(-v // k), v + 1):
                row |= prevl[v - a] << tri(a)
            cur[v] = row if v else 1
        layers.append(cur)
    return layers


def member_witness(n: int, r: int, m: int, *, max_table_bits: int | None = None) -> CliquePartition | None:
    """A clique partition realizing edge sum m, or None when m is not in C(n, r).

    Deterministic: at each step the largest feasible part is taken.
    """
    if m < 0 or m > tri(n):
        return None
    r = min(max(r, 1), max(n, 1))
    layers = _witness_tables(n, r, max_table_bits)
    if not (layers[r - 1][n] >> m) & 1:
        return None
    parts: list[int] = []
    v, k, rem = n, r, m
    while v > 0:
        if k == 1:
            assert tri(v) == rem
            parts.append(v)
            break
        placed = False
        for a in range(v, 0, -1):
            t = tri(a)
            if t <= rem and (layers[k - 2][v - a] >> (rem - t)) & 1:
                parts.append(a)
                v, k, rem = v - a, k - 1, rem - t
                placed = True
                break
        if not placed:  # remaining budget must be all singleton/empty parts
            assert rem == 0
            parts.extend([1] * v)
            break
    return CliquePartition(parts=tuple(parts), n=n)


@dataclass(frozen=True)
class DensityReport:
    n: int
    r: int
    count: int
    density: float
    min_element: int
    max_element: int
    bounds_ok: bool


def _bounds_ok(n: int, r: int, count: int, min_element: int) -> bool:
    # min element >= n^2/2r - n/2 and count <= n^2/2 - n^2/2r + 1,
    # checked in exact rational arithmetic (the +1 is forced by the
    # derivation max - min + 1; see module tests).
    min_ok = Fraction(2 * r) * min_element >= Fraction(n * n - n * r)
    count_ok = Fraction(2 * r) * (count - 1) <= Fraction(n * n * (r - 1))
    return bool(min_ok and count_ok)


def density_and_bounds(n: int, r: int, *, max_table_bits: int | None = None) -> DensityReport:
    """Cardinality, density and the two bound checks for C(n, r)."""
    spec = spectrum(n, r, max_table_bits=max_table_bits)
    denom = tri(n)
    return DensityReport(
        n=n,
        r=r,
        count=spec.count,
        density=spec.count / denom if denom else 1.0,
        min_element=spec.min_element,
        max_element=spec.max_element,
        bounds_ok=_bounds_ok(n, r, spec.count, spec.min_element),
    )


def bounds_sweep(n_max: int, r_max: int) -> Iterator[DensityReport]:
    """Stream DensityReports for every 1 <= n <= n_max, 2 <= r <= r_max.

    One full-table DP pass per report family: rows for all v are kept for
    the current layer only, so the whole sweep costs two layers of memory.
    """
    prev = [1 << tri(v) for v in range(n_max + 1)]
    for r in range(2, r_max + 1):
        cur = [0] * (n_max + 1)
        for v in range(n_max + 1):
            row = 0
            for a in range(-(-v // r), v + 1):
                row |= prev[v - a] << tri(a)
            cur[v] = row
        prev = cur
        for n in range(1, n_max + 1):
            row = cur[n]
            count = row.bit_count()
            min_el = (row & -row).bit_length() - 1
            denom = tri(n)
            yield DensityReport(
                n=n,
                r=r,
                count=count,
                density=count / denom if denom else 1.0,
                min_element=min_el,
                max_element=row.bit_length() - 1,
                bounds_ok=_bounds_ok(n, r, count, min_el),
            )


@dataclass(frozen=True)
class IntervalReport:
    ok: bool
    first_gap: int | None
    vacuous: bool
    lo: int
    hi: int


def verify_interval(
    n: int,
    r: int,
    c_low: float,
    c_high: float,
    *,
    clip: bool = False,
    max_table_bits: int | None = None,
) -> IntervalReport:
    """Check that every integer in [n^2/2r + c_low*n, (n^2-n)/2 - c_high*n^1.5]
    belongs to C(n, r); on failure report the smallest missing integer.

    An empty interval (including a negative upper endpoint) is vacuously
    true and flagged as such.
    """
    import math

    lo = math.ceil(n * n / (2 * r) + c_low * n)
    hi = math.floor((n * n - n) / 2 - c_high * n * math.sqrt(n))
    spec = spectrum(n, r, max_table_bits=max_table_bits)
    if clip and spec.mask:
        lo = max(lo, spec.min_element)
        hi = min(hi, spec.max_element)
    if lo > hi:
        return IntervalReport(ok=True, first_gap=None, vacuous=True, lo=lo, hi=hi)
    lo = max(lo, 0)
    width = hi - lo + 1
    window = (spec.mask >> lo) & ((1 << width) - 1)
    missing = ~window & ((1 << width) - 1)
    if missing == 0:
        return IntervalReport(ok=True, first_gap=None, vacuous=False, lo=lo, hi=hi)
    gap = (missing & -missing).bit_length() - 1 + lo
    return IntervalReport(ok=False, first_gap=gap, vacuous=False, lo=lo, hi=hi)


def shift_inclusion_check(n: int, r: int, *, max_table_bits: int | None = None) -> bool:
    """Every element of C(n - floor(n/(r+1)), r), shifted by the edge count of
    one clique on floor(n/(r+1)) vertices, lands inside C(n, r+1)."""
    if n < r + 1:
        raise ValueError(f"need n >= r+1, got n={n}, r={r}")
    s = n // (r + 1)
    small = spectrum(n - s, r, max_table_bits=max_table_bits)
    big = spectrum(n, r + 1, max_table_bits=max_table_bits)
    shifted = small.mask << tri(s)
    return shifted | big.mask == big.mask
