import pytest

from edgespectra.cliquespec import (
    CliquePartition,
    EdgeSpectrum,
    SpectrumMemoryError,
    bounded_partitions,
    bounds_sweep,
    density_and_bounds,
    member_witness,
    shift_inclusion_check,
    spectrum,
    verify_interval,
)
from edgespectra.triangles import tri


def brute_spectrum(n, r):
    if n == 0:
        return {0}
    return {sum(tri(p) for p in parts) for parts in bounded_partitions(n, r)}


def test_spectrum_examples():
    assert spectrum(3, 2).members() == [1, 3]
    assert spectrum(5, 2).members() == [4, 6, 10]
    assert spectrum(4, 1).members() == [6]


def test_partition_type():
    p = CliquePartition(parts=(2, 3), n=5)
    assert p.parts == (3, 2)  # canonical nonincreasing
    assert p.edge_sum() == 4
    with pytest.raises(ValueError):
        CliquePartition(parts=(3, 3), n=5)


def test_spectrum_matches_brute_force():
    for n in range(0, 15):
        for r in range(1, 6):
            assert set(spectrum(n, r).members()) == brute_spectrum(n, r), (n, r)


def test_monotone_in_r():
    for n in (7, 12, 25, 40):
        prev = 0
        for r in range(1, n + 2):
            mask = spectrum(n, r).mask
            assert prev | mask == mask
            prev = mask


def test_extremes():
    for n in range(1, 25):
        for r in range(1, n + 2):
            spec = spectrum(n, r)
            assert tri(n) in spec          # one clique on everything
            assert (0 in spec) == (r >= n)  # only singletons reach zero edges


def test_member_witness_examples():
    assert member_witness(5, 2, 4).parts == (3, 2)
    assert member_witness(5, 2, 5) is None
    assert member_witness(4, 1, 6).parts == (4,)


def test_witness_soundness():
    for n, r in ((9, 3), (12, 4), (16, 5), (20, 2)):
        spec = spectrum(n, r)
        for m in range(tri(n) + 1):
            w = member_witness(n, r, m)
            if m in spec:
                assert w is not None
                assert sum(w.parts) == n
                assert len([p for p in w.parts if p > 0]) <= r
                assert w.edge_sum() == m
            else:
                assert w is None


def test_density_examples():
    rep = density_and_bounds(10, 3)
    assert rep.min_element == 12 and rep.bounds_ok
    rep = density_and_bounds(4, 1)
    assert rep.count == 1 and rep.density == pytest.approx(1 / 6)


def test_min_element_bound_small_sweep():
    for rep in bounds_sweep(60, 9):
        assert rep.bounds_ok, rep
        assert 2 * rep.r * rep.min_element >= rep.n ** 2 - rep.n * rep.r
        assert rep.count <= rep.n ** 2 / 2 - rep.n ** 2 / (2 * rep.r) + 1


def test_sweep_agrees_with_single_runs():
    singles = {(rep.n, rep.r): rep for rep in bounds_sweep(20, 4)}
    for n in range(1, 21):
        for r in range(2, 5):
            direct = density_and_bounds(n, r)
            assert singles[(n, r)].count == direct.count
            assert singles[(n, r)].min_element == direct.min_element


def test_memory_guard():
    with pytest.raises(SpectrumMemoryError):
        spectrum(500, 5, max_table_bits=1000)
    with pytest.raises(SpectrumMemoryError):
        member_witness(400, 6, 10_000, max_table_bits=1000)


def test_interval_vacuous_case():
    rep = verify_interval(500, 7, 0.5 + 2100 / 500, 66)
    assert rep.vacuous and rep.ok and rep.first_gap is None
    assert rep.hi < 0


def test_interval_direct_cases():
    rep = verify_interval(200, 9, 1, 1)
    assert not rep.vacuous
    assert rep.ok is False and rep.first_gap == 14739  # pinned from first verified run
    spec = spectrum(200, 9)
    assert rep.first_gap not in spec
    assert all(e in spec for e in range(rep.lo, rep.first_gap))

    rep = verify_interval(30, 3, 0, 0, clip=True)
    assert rep.ok is False and rep.first_gap == 150  # pinned from first verified run
    assert rep.first_gap not in spectrum(30, 3)


def test_interval_agrees_with_member_scan():
    # the bit-window logic matches an independent scan of the member list
    for n, r, c_low, c_high in ((12, 12, 0, 0), (30, 3, 0, 0), (25, 4, 1, 0.5),
                                (18, 2, 0, 0), (40, 6, 2, 0)):
        rep = verify_interval(n, r, c_low, c_high, clip=True)
        members = set(spectrum(n, r).members())
        if rep.lo > rep.hi:
            assert rep.vacuous and rep.ok
            continue
        gaps = [e for e in range(rep.lo, rep.hi + 1) if e not in members]
        assert rep.ok == (not gaps), (n, r)
        assert rep.first_gap == (gaps[0] if gaps else None), (n, r)


def test_shift_inclusion():
    assert shift_inclusion_check(8, 2)
    assert shift_inclusion_check(3, 2)   # n = r + 1 degenerate shift
    assert shift_inclusion_check(60, 4)
    for n in range(5, 40, 7):
        for r in range(2, 5):
            assert shift_inclusion_check(n, r), (n, r)


def test_export_roundtrip():
    spec = spectrum(9, 3)
    lines = spec.export_lines()
    back = EdgeSpectrum.parse_export(lines)
    assert back.mask == spec.mask and back.n == spec.n


def test_export_header_fields():
    import json

    header = json.loads(spectrum(5, 2).export_lines()[0])
    assert header == {"n": 5, "r": 2, "count": 3, "min": 4, "max": 10}


def test_export_empty_set():
    empty = EdgeSpectrum.from_members(4, None, [])
    lines = empty.export_lines()
    assert len(lines) == 1
    assert EdgeSpectrum.parse_export(lines).mask == 0
