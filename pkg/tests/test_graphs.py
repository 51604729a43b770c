from fractions import Fraction

import pytest

from edgespectra.cliquespec import spectrum
from edgespectra.graphs import (
    GraphMask,
    ScaleRejected,
    arrow,
    canonical_reps,
    compute_Snm,
    concentration_experiment,
    induced_closure_check,
    interval_runs,
    turan_check,
    turan_number,
)
from edgespectra.triangles import tri

# isomorphism-class counts of simple graphs on 1..8 vertices (OEIS A000088)
ISO_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def test_arrow_examples():
    assert arrow(3, 1, 2, 1).holds
    res = arrow(3, 0, 2, 1)
    assert not res.holds and res.counterexample.edges == 0
    res = arrow(5, 6, 3, 3)
    assert not res.holds
    g = res.counterexample
    assert g.edge_count == 6
    assert 3 not in g.achieved_counts(3)  # triangle-free with 6 edges
    res.validate(6, 3, 3)


def test_arrow_scale_rejection():
    with pytest.raises(ScaleRejected):
        arrow(8, 5, 3, 1)  # n=8 needs the dedup flag
    with pytest.raises(ScaleRejected):
        arrow(9, 5, 3, 1, dedup=True)
    with pytest.raises(ScaleRejected):
        arrow(4, 1, 1, 0)
    with pytest.raises(ValueError):
        arrow(5, 99, 3, 1)


def test_snm_examples():
    assert compute_Snm(3, 2, 1).members() == [1, 2, 3]
    assert compute_Snm(4, 2, 0).members() == [0, 1, 2, 3, 4, 5]
    assert compute_Snm(5, 3, 3).members() == [7, 8, 9, 10]


def test_snm_never_contains_both_ends():
    for n in range(2, 7):
        for m in range(2, min(4, n) + 1):
            for f in range(tri(m) + 1):
                s = compute_Snm(n, m, f)
                assert not (0 in s and tri(n) in s), (n, m, f)


def test_turan_numbers():
    assert turan_number(5, 2) == 6
    assert turan_number(6, 2) == 9
    assert turan_number(7, 3) == 16


def test_turan_check_small():
    for n in range(4, 7):
        for m in (3, 4):
            assert turan_check(n, m), (n, m)


def test_interval_runs_examples():
    rep = interval_runs(3, 2, 1)
    assert rep.runs == ((1, 3),) and rep.count == 1
    rep = interval_runs(4, 2, 0)
    assert rep.runs == ((0, 5),)
    rep = interval_runs(4, 4, 5)  # only the graph itself is a 4-subset, so S = {5}
    assert rep.runs == ((5, 5),)
    rep = interval_runs(6, 5, 4)  # no edge count forces an induced (5, 4) at n = 6
    assert rep.runs == () and rep.count == 0 and rep.covered_fraction == 0.0


def test_complement_symmetry():
    for n in range(2, 7):
        for m in range(2, min(4, n) + 1):
            for f in range(tri(m) + 1):
                s = set(compute_Snm(n, m, f).members())
                sc = set(compute_Snm(n, m, tri(m) - f).members())
                assert s == {tri(n) - e for e in sc}, (n, m, f)


def test_counterexample_soundness():
    for n in range(3, 7):
        for m in range(2, min(4, n) + 1):
            for f in range(tri(m) + 1):
                for e in range(0, tri(n) + 1, 3):
                    res = arrow(n, e, m, f)
                    res.validate(e, m, f)


def test_labeled_vs_dedup_agree():
    for n in range(2, 7):
        for m in range(2, min(4, n) + 1):
            for f in range(tri(m) + 1):
                labeled = compute_Snm(n, m, f).members()
                reduced = compute_Snm(n, m, f, dedup=True).members()
                assert labeled == reduced, (n, m, f)


def test_iso_catalogue_counts():
    for n in range(1, 8):
        assert len(canonical_reps(n)) == ISO_COUNTS[n], n


def test_catalogue_edge_count_distribution():
    # labeled bucket is nonempty exactly when the catalogue has that edge count
    for n in range(2, 7):
        cat_counts = {g.bit_count() for g in canonical_reps(n)}
        assert cat_counts == set(range(tri(n) + 1))


@pytest.mark.slow
def test_iso_catalogue_n8():
    assert len(canonical_reps(8)) == ISO_COUNTS[8]
    res = arrow(8, 17, 3, 3, dedup=True)
    assert res.holds  # above the classical threshold turan_number(8, 2) = 16
    res = arrow(8, 16, 3, 3, dedup=True)
    assert not res.holds


# complements of the arrow sets of the five density-1 pairs, pinned from the
# first verified run; each stays a short tail/head segment as n grows
MISSING_SPECIAL = {
    (2, 0): {3: [3], 4: [6], 5: [10], 6: [15], 7: [21]},
    (2, 1): {3: [0], 4: [0], 5: [0], 6: [0], 7: [0]},
    (4, 3): {4: [0, 1, 2, 4, 5, 6],
             5: [0, 1, 2, 3, 4, 6, 7, 8, 9, 10],
             6: [0, 1, 2, 3, 4, 5, 10, 11, 12, 13, 14, 15],
             7: [0, 1, 2, 3, 4, 5, 6, 15, 16, 17, 18, 19, 20, 21]},
    (5, 4): {5: [0, 1, 2, 3, 5, 6, 7, 8, 9, 10],
             6: list(range(16)),
             7: [0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17,
                 18, 19, 20, 21]},
    (5, 6): {5: [0, 1, 2, 3, 4, 5, 7, 8, 9, 10],
             6: list(range(16)),
             7: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 17,
                 18, 19, 20, 21]},
}


def test_special_pair_arrow_sets_pinned():
    for (m, f), by_n in MISSING_SPECIAL.items():
        for n, missing in by_n.items():
            s = set(compute_Snm(n, m, f).members())
            assert sorted(set(range(tri(n) + 1)) - s) == missing, (m, f, n)


def test_graphmask_roundtrip():
    g = GraphMask.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert g.edge_count == 6
    assert g.edge_list() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    with pytest.raises(ValueError):
        GraphMask(n=3, edges=1 << 5)


def test_induced_closure_examples():
    assert induced_closure_check(10, 3, 5)
    assert induced_closure_check(6, 1, 3)
    assert induced_closure_check(12, 4, 6, trials=2000, seed=3)


def test_induced_closure_scale_guard():
    with pytest.raises(ScaleRejected):
        induced_closure_check(13, 3, 5)
    with pytest.raises(ScaleRejected):
        induced_closure_check(11, 3, 5)  # exhaustive mode needs n <= 10


def test_concentration_exact_small():
    rep = concentration_experiment(6, 5, 3, trials=500, seed=0)
    assert rep.enum_mean == Fraction(1)
    assert rep.expectation_identity_ok
    assert rep.expected_mean == pytest.approx(1.0)


def test_concentration_zero_edges():
    rep = concentration_experiment(12, 0, 4, trials=200, seed=0)
    assert rep.empirical_mean == 0.0 and rep.empirical_std == 0.0
    assert rep.enum_mean == 0


def test_concentration_monte_carlo():
    rep = concentration_experiment(200, 5000, 30, trials=20_000, seed=42)
    se = rep.empirical_std / (rep.trials ** 0.5)
    assert abs(rep.empirical_mean - rep.expected_mean) <= 3 * max(se, 1e-9)
    assert rep.tails_ok


def test_concentration_reproducible():
    a = concentration_experiment(50, 300, 10, trials=2000, seed=9)
    b = concentration_experiment(50, 300, 10, trials=2000, seed=9)
    assert a == b
