#!/usr/bin/env python3
"""Certified density bounds for target pairs (m, f).

Walks the verdict engine over small pairs and a large constructed pair,
showing which rules fire and what interval each pair ends up with.
"""

from edgespectra import SPECIAL_PAIRS, classify_pair, dm_witness, triple_identity, min_r
from edgespectra.triangles import decompose_lower, decompose_upper, tri


def show(m, f):
    v = classify_pair(m, f)
    rules = ",".join(sorted({t.rule for t in v.trace}))
    if v.exact is not None:
        verdict = f"exact {v.exact}"
    else:
        verdict = f"in [{v.lower if v.lower is not None else '?'} , {v.upper}]"
    print(f"  ({m:>4}, {f:>6})  ->  {verdict:<18}  rules: {rules}")
    return v


print("=" * 72)
print("1. The five exceptional pairs have density exactly 1")
print("=" * 72)
for m, f in sorted(SPECIAL_PAIRS):
    show(m, f)

print()
print("=" * 72)
print("2. Every other pair with m <= 7 is certified at 0 or <= 1/2")
print("=" * 72)
for m in range(2, 8):
    for f in range(tri(m) + 1):
        if (m, f) in SPECIAL_PAIRS:
            continue
        v = classify_pair(m, f)
        assert v.exact == 0 or v.upper <= 0.5, (m, f)
print("  all verdicts certified at 0 or <= 1/2; spot checks:")
show(7, 12)   # excess-decomposition rule forces 0
show(7, 10)   # deficit-decomposition rule (on the complement) caps at 1/2

print()
print("=" * 72)
print("3. Anatomy of the rules on (7, 12)")
print("=" * 72)
print("  upward decomposition of 12:", decompose_upper(12))
print("  downward decomposition of 11:", decompose_lower(11))
print("  product-form witness for 12 in D(8):", dm_witness(12, 8))
print("  ... and 17 has none in D(8):", dm_witness(17, 8))

print()
print("=" * 72)
print("4. A large pair with density exactly 1/2")
print("=" * 72)
m, f = 1112, 222111
print("  minimal clique rank:", min_r(m, f))
print("  triple identity report:", triple_identity(m, f))
v = show(m, f)
for t in v.trace:
    print("   trace:", t.as_dict())

print()
print("=" * 72)
print("5. Complete targets: (m, tri(m)) has density 1/(m-1) once m >= 6")
print("=" * 72)
for m in (6, 7, 8, 10):
    show(m, tri(m))
