"""Brute-force ground truth on small graphs.

Labeled n-vertex graphs are bitmasks over the C(n, 2) vertex pairs in
lexicographic order, enumerated exhaustively for n <= 7 (2^21 masks at
n = 7).  The inner kernel for every question asked here is "how many edges
does a vertex subset induce", computed as popcount(edges & subset_pair_mask)
and vectorized across all masks at once with numpy.

n = 8 is reachable only through the isomorphism-reduced path: an
augmentation catalogue of canonical representatives, deduplicated by cheap
invariants plus an exact backtracking isomorphism test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

import numpy as np

from .cliquespec import EdgeSpectrum, bounded_partitions, spectrum
from .triangles import tri

MAX_LABELED_N = 7
MAX_DEDUP_N = 8
_ENUM_LIMIT = 10 ** 6  # full-subset enumeration cap for exact expectations


class ScaleRejected(Exception):
    """Vertex count outside the supported exhaustive range."""


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(pair_list(n))}


def subset_pair_mask(n: int, subset: tuple[int, ...]) -> int:
    idx = _pair_index(n)
    mask = 0
    for p in combinations(sorted(subset), 2):
        mask |= 1 << idx[p]
    return mask


@dataclass(frozen=True)
class GraphMask:
    """Labeled graph on n <= 8 vertices as an edge bitmask."""

    n: int
    edges: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEDUP_N:
            raise ScaleRejected(f"n={self.n} outside supported range")
        if self.edges >> tri(self.n):
            raise ValueError("edge bits beyond the pair range")

    @property
    def edge_count(self) -> int:
        return self.edges.bit_count()

    def edge_list(self) -> list[tuple[int, int]]:
        pl = pair_list(self.n)
        return [pl[i] for i in range(tri(self.n)) if (self.edges >> i) & 1]

    def induced_count(self, subset: tuple[int, ...]) -> int:
        return (self.edges & subset_pair_mask(self.n, subset)).bit_count()

    def achieved_counts(self, m: int) -> set[int]:
        return {self.induced_count(s) for s in combinations(range(self.n), m)}

    @classmethod
    def from_edges(cls, n: int, edges) -> "GraphMask":
        idx = _pair_index(n)
        mask = 0
        for u, v in edges:
            mask |= 1 << idx[(min(u, v), max(u, v))]
        return cls(n=n, edges=mask)


def _validate_arrow_args(n: int, e: int, m: int, f: int, dedup: bool):
    limit = MAX_DEDUP_N if dedup else MAX_LABELED_N
    if not 2 <= m <= n <= limit:
        raise ScaleRejected(
            f"need 2 <= m <= n <= {limit} ({'with' if dedup else 'without'} dedup), "
            f"got n={n}, m={m}"
        )
    if not 0 <= e <= tri(n):
        raise ValueError(f"e={e} outside [0, {tri(n)}]")
    if not 0 <= f <= tri(m):
        raise ValueError(f"f={f} outside [0, {tri(m)}]")


# ---------------------------------------------------------------------------
# Labeled exhaustive tables (vectorized)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=3)
def _popcounts(n: int) -> np.ndarray:
    arr = np.arange(1 << tri(n), dtype=np.uint32)
    return np.bitwise_count(arr).astype(np.uint8)


@lru_cache(maxsize=4)
def _achieved_table(n: int, m: int) -> np.ndarray:
    """Per labeled graph, the bitset of induced edge counts over m-subsets."""
    arr = np.arange(1 << tri(n), dtype=np.uint32)
    achieved = np.zeros(arr.shape, dtype=np.uint32)
    for subset in combinations(range(n), m):
        smask = np.uint32(subset_pair_mask(n, subset))
        cnt = np.bitwise_count(arr & smask).astype(np.uint32)
        achieved |= np.left_shift(np.uint32(1), cnt)
    return achieved


@lru_cache(maxsize=8)
def _snm_table(n: int, m: int) -> np.ndarray:
    """good[f, e] = every labeled graph with e edges achieves f on some m-subset."""
    ach = _achieved_table(n, m)
    pc = _popcounts(n)
    good = np.ones((tri(m) + 1, tri(n) + 1), dtype=bool)
    for f in range(tri(m) + 1):
        lacking = (ach >> np.uint32(f)) & np.uint32(1) == 0
        good[f, np.unique(pc[lacking])] = False
    return good


@dataclass(frozen=True)
class ArrowResult:
    holds: bool
    counterexample: Optional[GraphMask]

    def validate(self, e: int, m: int, f: int) -> None:
        if self.holds != (self.counterexample is None):
            raise AssertionError("holds flag disagrees with counterexample presence")
        if self.counterexample is not None:
            g = self.counterexample
            if g.edge_count != e:
                raise AssertionError("counterexample has wrong edge count")
            if f in g.achieved_counts(m):
                raise AssertionError("counterexample achieves f after all")


def arrow(n: int, e: int, m: int, f: int, *, dedup: bool = False) -> ArrowResult:
    """Does every n-vertex graph with e edges contain an induced m-subset
    spanning exactly f edges?  On failure the lowest-numbered (or first
    catalogued, under dedup) counterexample is returned."""
    _validate_arrow_args(n, e, m, f, dedup)
    if dedup:
        for g in canonical_reps(n):
            if g.bit_count() != e:
                continue
            gm = GraphMask(n=n, edges=g)
            if f not in gm.achieved_counts(m):
                return ArrowResult(holds=False, counterexample=gm)
        return ArrowResult(holds=True, counterexample=None)
    ach = _achieved_table(n, m)
    pc = _popcounts(n)
    sel = np.flatnonzero(pc == e)
    chunk = 1 << 16
    for i in range(0, sel.size, chunk):
        block = sel[i:i + chunk]
        lacking = (ach[block] >> np.uint32(f)) & np.uint32(1) == 0
        hits = np.flatnonzero(lacking)
        if hits.size:
            return ArrowResult(holds=False,
                               counterexample=GraphMask(n=n, edges=int(block[hits[0]])))
    return ArrowResult(holds=True, counterexample=None)


def compute_Snm(n: int, m: int, f: int, *, dedup: bool = False) -> EdgeSpectrum:
    """The exact set of edge counts e for which arrow(n, e, m, f) holds."""
    _validate_arrow_args(n, 0, m, f, dedup)
    if dedup:
        good = [True] * (tri(n) + 1)
        for g in canonical_reps(n):
            e = g.bit_count()
            if good[e] and f not in GraphMask(n=n, edges=g).achieved_counts(m):
                good[e] = False
        members = [e for e, ok in enumerate(good) if ok]
    else:
        members = np.flatnonzero(_snm_table(n, m)[f]).tolist()
    return EdgeSpectrum.from_members(n, None, members)


def turan_number(n: int, p: int) -> int:
    """Edge count of the complete balanced p-partite graph on n vertices."""
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    q, rem = divmod(n, p)
    return tri(n) - rem * tri(q + 1) - (p - rem) * tri(q)


def turan_check(n: int, m: int) -> bool:
    """Clique-arrow sets match the classical threshold: the e with
    arrow(n, e, m, tri(m)) are exactly those above turan_number(n, m-1)."""
    if m not in (3, 4):
        raise ValueError(f"turan_check supports m in {{3, 4}}, got {m}")
    s = compute_Snm(n, m, tri(m))
    t = turan_number(n, m - 1)
    expected = set(range(t + 1, tri(n) + 1))
    return set(s.members()) == expected


@dataclass(frozen=True)
class RunReport:
    runs: tuple[tuple[int, int], ...]
    count: int
    covered_fraction: float


def interval_runs(n: int, m: int, f: int) -> RunReport:
    """Maximal runs of consecutive members of the arrow set, with the
    fraction of all edge counts they cover."""
    members = compute_Snm(n, m, f).members()
    runs: list[tuple[int, int]] = []
    for e in members:
        if runs and runs[-1][1] == e - 1:
            runs[-1] = (runs[-1][0], e)
        else:
            runs.append((e, e))
    denom = tri(n)
    return RunReport(runs=tuple(runs), count=len(runs),
                     covered_fraction=len(members) / denom if denom else 0.0)


# ---------------------------------------------------------------------------
# Unions of cliques: induced closure
# ---------------------------------------------------------------------------

def _clique_union_mask(n: int, parts: tuple[int, ...]) -> int:
    idx = _pair_index(n)
    mask = 0
    start = 0
    for p in parts:
        for u, v in combinations(range(start, start + p), 2):
            mask |= 1 << idx[(u, v)]
        start += p
    return mask


def induced_closure_check(
    n: int, r: int, m: int, trials: int | None = None, seed: int = 0
) -> bool:
    """Every m-subset of every union of at most r cliques on n vertices
    induces an edge count lying in the (m, r) clique spectrum.

    trials=None enumerates all partitions exhaustively (n <= 10); otherwise
    `trials` random partitions are drawn from a seeded generator.
    """
    if not 2 <= m <= n <= 12:
        raise ScaleRejected(f"need 2 <= m <= n <= 12, got n={n}, m={m}")
    if trials is None and n > 10:
        raise ScaleRejected(f"exhaustive mode needs n <= 10, got {n}")
    target = spectrum(m, r)
    if trials is None:
        parts_iter = bounded_partitions(n, r)
    else:
        rng = np.random.default_rng(seed)

        def _random_parts():
            for _ in range(trials):
                cuts = sorted(int(c) for c in rng.integers(0, n + 1, size=r - 1))
                bounds = [0] + cuts + [n]
                yield tuple(b - a for a, b in zip(bounds, bounds[1:]) if b > a)

        parts_iter = _random_parts()
    subsets = list(combinations(range(n), m))
    smasks = [subset_pair_mask(n, s) for s in subsets]
    for parts in parts_iter:
        gmask = _clique_union_mask(n, parts)
        for sm in smasks:
            if (gmask & sm).bit_count() not in target:
                return False
    return True


# ---------------------------------------------------------------------------
# Random-subset concentration experiment
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TailCheck:
    t: float
    bound: float
    observed: float
    slack: float

    @property
    def ok(self) -> bool:
        return self.observed <= self.bound + self.slack


@dataclass(frozen=True)
class ConcentrationReport:
    N: int
    E: int
    n: int
    trials: int
    seed: int
    expected_mean: float
    empirical_mean: float
    empirical_std: float
    tails: tuple[TailCheck, ...]
    enum_mean: Optional[Fraction]
    expectation_identity_ok: Optional[bool]

    @property
    def tails_ok(self) -> bool:
        return all(t.ok for t in self.tails)


_TAIL_GRID = (0.25, 0.5, 0.75, 1.0, 1.25)


def concentration_experiment(
    N: int, E: int, n: int, trials: int, seed: int = 0
) -> ConcentrationReport:
    """Sample one random graph with E edges on N vertices and measure how
    induced edge counts of uniform n-subsets concentrate.

    The mean of the induced count over all n-subsets equals
    E * tri(n) / tri(N) for every graph; that identity is asserted by full
    enumeration whenever C(N, n) <= 10^6.  Empirical tail frequencies are
    compared against 2*exp(-2 t^2 / (min(n, N-n) (n-1)^2)) plus three
    binomial standard errors.
    """
    if not 2 <= n <= N:
        raise ValueError(f"need 2 <= n <= N, got n={n}, N={N}")
    if not 0 <= E <= tri(N):
        raise ValueError(f"E={E} outside [0, {tri(N)}]")
    rng = np.random.default_rng(seed)
    pl = pair_list(N)
    chosen = rng.choice(tri(N), size=E, replace=False) if E else np.empty(0, dtype=int)
    adj = np.zeros((N, N), dtype=bool)
    for i in chosen:
        u, v = pl[int(i)]
        adj[u, v] = adj[v, u] = True

    expected_mean = Fraction(E) * tri(n) / tri(N) if tri(N) else Fraction(0)

    enum_mean = None
    identity_ok = None
    if math.comb(N, n) <= _ENUM_LIMIT:
        total = 0
        for s in combinations(range(N), n):
            sub = adj[np.ix_(s, s)]
            total += int(sub.sum()) // 2
        enum_mean = Fraction(total, math.comb(N, n))
        identity_ok = enum_mean == expected_mean

    counts = np.empty(trials, dtype=np.int64)
    for i in range(trials):
        s = rng.choice(N, size=n, replace=False)
        counts[i] = int(adj[np.ix_(s, s)].sum()) // 2
    emp_mean = float(counts.mean()) if trials else 0.0
    emp_std = float(counts.std()) if trials else 0.0

    mu = float(expected_mean)
    denom = min(n, N - n) * (n - 1) ** 2 if n > 1 else 1
    tails = []
    for cscale in _TAIL_GRID:
        t = cscale * (n - 1) * math.sqrt(min(n, N - n)) if N > n else 0.0
        bound = 2.0 * math.exp(-2.0 * t * t / denom) if denom else 0.0
        observed = float(np.mean(np.abs(counts - mu) >= t)) if trials else 0.0
        se = math.sqrt(max(bound * (1 - bound), 1e-12) / trials) if trials else 0.0
        tails.append(TailCheck(t=t, bound=bound, observed=observed, slack=3 * se))
    return ConcentrationReport(
        N=N, E=E, n=n, trials=trials, seed=seed,
        expected_mean=mu, empirical_mean=emp_mean, empirical_std=emp_std,
        tails=tuple(tails), enum_mean=enum_mean, expectation_identity_ok=identity_ok,
    )


# ---------------------------------------------------------------------------
# Isomorphism-reduced catalogue (augmentation + invariant buckets + exact iso)
# ---------------------------------------------------------------------------

def _adjacency(n: int, mask: int) -> tuple[int, ...]:
    adj = [0] * n
    for i, (u, v) in enumerate(pair_list(n)):
        if (mask >> i) & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return tuple(adj)


def _invariant(adj: tuple[int, ...]) -> tuple:
    degs = [a.bit_count() for a in adj]
    nbr_profiles = sorted(
        (degs[v], tuple(sorted(degs[u] for u in range(len(adj)) if (adj[v] >> u) & 1)))
        for v in range(len(adj))
    )
    triangles = 0
    for v in range(len(adj)):
        for u in range(v + 1, len(adj)):
            if (adj[v] >> u) & 1:
                triangles += (adj[v] & adj[u]).bit_count()
    return tuple(sorted(degs)), tuple(nbr_profiles), triangles // 3


def _isomorphic(adj_a: tuple[int, ...], adj_b: tuple[int, ...]) -> bool:
    k = len(adj_a)
    deg_a = [a.bit_count() for a in adj_a]
    deg_b = [b.bit_count() for b in adj_b]
    if sorted(deg_a) != sorted(deg_b):
        return False
    order = sorted(range(k), key=lambda v: (-deg_a[v], v))
    mapping = [-1] * k

    def bt(i: int, used: int) -> bool:
        if i == k:
            return True
        va = order[i]
        for vb in range(k):
            if (used >> vb) & 1 or deg_b[vb] != deg_a[va]:
                continue
            ok = True
            for j in range(i):
                ua, ub = order[j], mapping[order[j]]
                if ((adj_a[va] >> ua) & 1) != ((adj_b[vb] >> ub) & 1):
                    ok = False
                    break
            if ok:
                mapping[va] = vb
                if bt(i + 1, used | (1 << vb)):
                    return True
                mapping[va] = -1
        return False

    return bt(0, 0)


@lru_cache(maxsize=None)
def canonical_reps(n: int) -> tuple[int, ...]:
    """One labeled representative per isomorphism class of n-vertex graphs,
    built by augmenting the (n-1)-vertex catalogue with all neighborhoods
    of a new vertex."""
    if not 1 <= n <= MAX_DEDUP_N:
        raise ScaleRejected(f"catalogue supports 1 <= n <= {MAX_DEDUP_N}, got {n}")
    if n == 1:
        return (0,)
    prev = canonical_reps(n - 1)
    old_idx = _pair_index(n - 1)
    new_idx = _pair_index(n)
    remap = {old_idx[p]: new_idx[p] for p in pair_list(n - 1)}
    new_vertex_bits = [new_idx[(u, n - 1)] for u in range(n - 1)]

    buckets: dict[tuple, list[tuple[int, ...]]] = {}
    reps: list[int] = []
    for g in prev:
        base = 0
        for i in range(tri(n - 1)):
            if (g >> i) & 1:
                base |= 1 << remap[i]
        for nb in range(1 << (n - 1)):
            mask = base
            for u in range(n - 1):
                if (nb >> u) & 1:
                    mask |= 1 << new_vertex_bits[u]
            adj = _adjacency(n, mask)
            inv = _invariant(adj)
            bucket = buckets.setdefault(inv, [])
            if any(_isomorphic(adj, other) for other in bucket):
                continue
            bucket.append(adj)
            reps.append(mask)
    return tuple(reps)
