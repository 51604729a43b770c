"""Representation counts for membership among unions of five cliques.

A 4-tuple of coordinates 1 <= x_i <= N with x_1+..+x_4 <= sum_cap places
one tuple of weight at m = tri(x_1)+..+tri(x_4) + tri(n - sum), which by
the quadratic identity equals (Q(x) - n)/2 for
Q(x) = x_1^2+..+x_4^2 + (x_1+..+x_4 - n)^2.  Any m with a positive count
is therefore realizable by five cliques on n vertices.

The histogram is accumulated over sorted tuples with permutation
multiplicities; the plain 4-loop version is retained as the oracle route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Optional

import numpy as np

from .triangles import tri

_MAX_TUPLES = 50_000_000


class TupleBudgetExceeded(Exception):
    """The sorted-tuple iteration estimate exceeds the resource guard."""


@dataclass(frozen=True)
class RepHistogram:
    n: int
    N: int
    sum_cap: int
    counts: np.ndarray = field(repr=False)

    def R(self, m: int) -> int:
        if not 0 <= m < self.counts.size:
            return 0
        return int(self.counts[m])

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.counts)

    @property
    def total_tuples(self) -> int:
        return int(self.counts.sum())

    def csv_rows(self):
        for m in self.support():
            yield int(m), int(self.counts[m])

    def summary(self) -> dict:
        return {"n": self.n, "N": self.N, "sum_cap": self.sum_cap,
                "support_size": int(self.support().size),
                "total_tuples": self.total_tuples}


def q_form(x: tuple[int, int, int, int], n: int) -> int:
    s = sum(x)
    return sum(v * v for v in x) + (s - n) ** 2


def _perm_weight(x: tuple[int, ...]) -> int:
    w = math.factorial(len(x))
    for v in set(x):
        w //= math.factorial(x.count(v))
    return w


def rep_histogram(n: int, N: int, sum_cap: Optional[int] = None,
                  *, max_tuples: int = _MAX_TUPLES) -> RepHistogram:
    """Counts of ordered 4-tuples per realized edge count m."""
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    sum_cap = n if sum_cap is None else sum_cap
    if sum_cap > n:
        raise ValueError(f"sum_cap={sum_cap} exceeds n={n}")
    estimate = math.comb(N + 3, 4)
    if estimate > max_tuples:
        raise TupleBudgetExceeded(f"~{estimate} sorted tuples exceeds cap {max_tuples}")
    counts = np.zeros(tri(n) + 1, dtype=np.int64)
    for x in combinations_with_replacement(range(1, N + 1), 4):
        s = x[0] + x[1] + x[2] + x[3]
        if s > sum_cap:
            continue
        m = tri(x[0]) + tri(x[1]) + tri(x[2]) + tri(x[3]) + tri(n - s)
        counts[m] += _perm_weight(x)
    return RepHistogram(n=n, N=N, sum_cap=sum_cap, counts=counts)


def rep_histogram_naive(n: int, N: int, sum_cap: Optional[int] = None) -> RepHistogram:
    """Reference route: plain 4 nested loops over ordered tuples."""
    sum_cap = n if sum_cap is None else sum_cap
    counts = np.zeros(tri(n) + 1, dtype=np.int64)
    for x1 in range(1, N + 1):
        for x2 in range(1, N + 1):
            for x3 in range(1, N + 1):
                for x4 in range(1, N + 1):
                    s = x1 + x2 + x3 + x4
                    if s > sum_cap:
                        continue
                    q = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 + (s - n) ** 2
                    counts[(q - n) // 2] += 1
    return RepHistogram(n=n, N=N, sum_cap=sum_cap, counts=counts)


@dataclass(frozen=True)
class ExceptionalReport:
    n: int
    N: int
    sum_cap: int
    lo: int
    hi: int
    zeros: int
    total: int
    range_empty: bool
    log_base: Optional[str] = None

    @property
    def fraction(self) -> float:
        return self.zeros / self.total if self.total else 0.0

    def as_dict(self) -> dict:
        return {"n": self.n, "N": self.N, "sum_cap": self.sum_cap,
                "zeros_in_range": self.zeros, "range": [self.lo, self.hi],
                "total": self.total, "fraction": self.fraction,
                "range_empty": self.range_empty, "log_base": self.log_base}


def exceptional_count(
    n: int,
    N: Optional[int] = None,
    lo_margin: float = 0.0,
    hi_margin: float = 0.0,
    sum_cap: Optional[int] = None,
    *,
    asymptotic: bool = False,
    max_tuples: int = _MAX_TUPLES,
) -> ExceptionalReport:
    """Count scan-range values m with no representation.

    The scan range is [n^2/10 + lo_margin, (n^2-n)/2 - hi_margin].  With
    asymptotic=True the margins become n^2/log(n) and the coordinate
    cap n/5 - n/log(n), with natural logarithm (recorded in the report);
    that asymptotic regime degenerates for small n and may produce an
    empty range or coordinate cap, which is flagged rather than hidden.
    """
    log_base = None
    if asymptotic:
        log_base = "e"
        lo_margin = hi_margin = n * n / math.log(n)
        N = math.floor(n / 5 - n / math.log(n))
        if N < 1:
            return ExceptionalReport(n=n, N=N, sum_cap=sum_cap or n, lo=0, hi=-1,
                                     zeros=0, total=0, range_empty=True, log_base=log_base)
    if N is None:
        N = n // 5
    hist = rep_histogram(n, N, sum_cap, max_tuples=max_tuples)
    lo = math.ceil(n * n / 10 + lo_margin)
    hi = math.floor((n * n - n) / 2 - hi_margin)
    if lo > hi:
        return ExceptionalReport(n=n, N=N, sum_cap=hist.sum_cap, lo=lo, hi=hi,
                                 zeros=0, total=0, range_empty=True, log_base=log_base)
    window = hist.counts[lo:hi + 1]
    zeros = int(np.count_nonzero(window == 0))
    return ExceptionalReport(n=n, N=N, sum_cap=hist.sum_cap, lo=lo, hi=hi,
                             zeros=zeros, total=hi - lo + 1, range_empty=False,
                             log_base=log_base)
