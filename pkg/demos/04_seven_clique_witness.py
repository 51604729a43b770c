#!/usr/bin/env python3
"""Constructive membership certificates for unions of seven cliques.

For m inside [n^2/14 + n/2 + 2100, (n^2-n)/2 - 66 n^1.5] the solver finds
a pivot t whose even gap f(t) = 2m + n - (n-6t)^2 - 6t^2 halves into a sum
of three squares, then reads off seven clique sizes.  The demo runs one
witness end to end and then a sampling campaign, recording which of the
ten scanned pivots succeeded.
"""

import random
import time
from collections import Counter

from edgespectra import is_three_square, r7_interval, three_square_decomp, witness7
from edgespectra.triangles import tri

n = 30000
lo, hi = r7_interval(n)
print("=" * 72)
print(f"1. Admissible interval at n = {n}: [{lo}, {hi}]  ({hi - lo + 1} values)")
print("=" * 72)

m = 100_000_000
w = witness7(n, m)
print(f"  witness for m = {m}:")
print(f"    pivot t = {w.t}, offsets (s1,s2,s3) = ({w.s1},{w.s2},{w.s3})")
print(f"    cliques: {w.parts}")
print(f"    sum of sizes = {sum(w.parts)}, edge sum = {sum(tri(p) for p in w.parts)}")
print(f"    accepted at window position {w.window_index} (anchor pivot {w.t_anchor})")

print()
print("=" * 72)
print("2. The three-square layer under the hood")
print("=" * 72)
for v in (33, 7, 28, 2 * 10 ** 9 + 1):
    d = three_square_decomp(v)
    print(f"  {v}: representable={is_three_square(v)}"
          + (f", e.g. {d.x}^2 + {d.y}^2 + {d.z}^2" if d else ""))

print()
print("=" * 72)
print("3. Sampling campaign: 20000 uniform in-interval targets")
print("=" * 72)
rng = random.Random(1)
t0 = time.time()
positions = Counter()
for _ in range(20000):
    w = witness7(n, rng.randint(lo, hi))
    w.validate()
    positions[w.window_index] += 1
print(f"  all witnesses valid  [{time.time() - t0:.1f}s]")
print("  window-position histogram (which scanned pivot was accepted):")
for idx in sorted(positions):
    print(f"    position {idx:>2}: {positions[idx]:>6}")
