import pytest

from edgespectra.triangles import (
    LowerDecomp,
    UpperDecomp,
    decompose_lower,
    decompose_upper,
    tri,
    tri_root,
)


def test_tri_basics():
    assert [tri(x) for x in range(7)] == [0, 0, 1, 3, 6, 10, 15]


def test_tri_root():
    assert tri_root(0) == 1
    assert tri_root(1) == 2
    assert tri_root(3) == 3
    assert tri_root(2) is None
    assert tri_root(222111) == 667
    assert tri_root(-1) is None


def test_upper_examples():
    assert decompose_upper(12) == UpperDecomp(5, 2)
    assert decompose_upper(0) == UpperDecomp(1, 0)
    assert decompose_upper(11) == UpperDecomp(5, 1)


def test_lower_examples():
    assert decompose_lower(11) == LowerDecomp(6, 4)
    assert decompose_lower(10) == LowerDecomp(5, 0)
    assert decompose_lower(3) == LowerDecomp(3, 0)


def test_lower_rejects_zero():
    with pytest.raises(ValueError):
        decompose_lower(0)
    with pytest.raises(ValueError):
        decompose_upper(-1)


def test_upper_roundtrip_and_range():
    for f in range(10_001):
        dec = decompose_upper(f)
        assert dec.value() == f
        assert 0 <= dec.ellp < dec.ell


def test_lower_roundtrip_and_range():
    for f in range(1, 10_001):
        dec = decompose_lower(f)
        assert dec.value() == f
        assert 0 <= dec.bp < dec.b - 1


def test_upper_uniqueness_by_scan():
    # brute scan over ell reproduces the closed-form decomposition
    for f in range(0, 500):
        hits = [(l, f - tri(l)) for l in range(1, f + 3) if 0 <= f - tri(l) < l]
        assert len(hits) == 1
        assert decompose_upper(f) == UpperDecomp(*hits[0])


def test_lower_uniqueness_by_scan():
    for f in range(1, 500):
        hits = [(b, tri(b) - f) for b in range(2, f + 3) if 0 <= tri(b) - f < b - 1]
        assert len(hits) == 1
        assert decompose_lower(f) == LowerDecomp(*hits[0])
