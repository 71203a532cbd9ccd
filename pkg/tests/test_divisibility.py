from fractions import Fraction

import pytest

from invchern.chern import ChernRecord, IncompleteRecordError, cpn_record, theta_record
from invchern.divisibility import (
    DivisibilityVerdict,
    SurfaceRecord,
    builtin_catalog,
    chern_slope,
    del_pezzo_scan,
    gcd_chern_numbers,
    hypersurface_scan,
    proportionality_check,
    signature_is_integral,
    surface_signature,
    surface_todd,
    surface_verdict,
    toric_surface_scan,
)

K3 = SurfaceRecord("K3", 0, 24)
ENRIQUES = SurfaceRecord("Enriques", 0, 12)
THETA2 = SurfaceRecord("Theta^2", 6, 6)
CP2 = SurfaceRecord("CP^2", 9, 3)


def divisible_set(scan):
    return {k for k, v in scan.items() if v.extremely_divisible}


def test_cpn_and_theta_verdicts():
    for n in range(1, 11):
        v = gcd_chern_numbers(cpn_record(n))
        assert (v.d, v.chi, v.extremely_divisible) == (n + 1, n + 1, True)
    v = gcd_chern_numbers(theta_record(3))
    assert (v.d, v.chi, v.extremely_divisible) == (24, -24, True)


def test_normal_records_give_same_verdict():
    for n in range(1, 6):
        assert gcd_chern_numbers(cpn_record(n, "normal")) == gcd_chern_numbers(cpn_record(n))


def test_partial_record_witness():
    rec = ChernRecord("X_Pi", 3, "tangent", {(3,): 20, (1, 1, 1): 24})
    v = gcd_chern_numbers(rec)
    assert not v.extremely_divisible and v.witnessed
    undecided = ChernRecord("u", 3, "tangent", {(3,): 48, (1, 1, 1): 24})
    with pytest.raises(IncompleteRecordError):
        gcd_chern_numbers(undecided)


def test_verdict_invariant():
    with pytest.raises(ValueError):
        DivisibilityVerdict(3, 3, False)
    with pytest.raises(ValueError):
        DivisibilityVerdict(0, 0, True)


def test_surface_verdicts():
    assert surface_verdict(K3) == DivisibilityVerdict(24, 24, True)
    assert surface_verdict(THETA2).extremely_divisible
    assert surface_verdict(ENRIQUES).extremely_divisible
    with pytest.raises(ValueError):
        surface_verdict(SurfaceRecord("abelian", 0, 0))


def test_del_pezzo():
    scan = del_pezzo_scan()
    assert divisible_set(scan) == {6, 8, 9}
    assert (scan[9].d, scan[9].chi) == (3, 3)
    assert (scan[7].d, scan[7].chi, scan[7].extremely_divisible) == (1, 5, False)


def test_toric():
    scan = toric_surface_scan(12)
    assert divisible_set(scan) == {3, 4, 6, 12}
    assert (scan[6].d, scan[6].chi) == (6, 6)
    assert (scan[12].d, scan[12].chi) == (12, 12)
    assert not scan[5].extremely_divisible


def test_hypersurfaces():
    scan = hypersurface_scan(6)
    assert divisible_set(scan) == {1, 2, 4}
    assert (scan[4].d, scan[4].chi) == (24, 24)
    assert (scan[2].d, scan[2].chi) == (4, 4)
    assert (scan[3].d, scan[3].chi) == (3, 9)


def test_signature_todd_slope():
    assert surface_signature(CP2) == 1
    assert surface_signature(K3) == -16
    assert surface_signature(THETA2) == -2
    assert surface_todd(K3) == 2
    assert surface_todd(CP2) == 1
    for N in range(3, 13):
        assert surface_todd(SurfaceRecord("X", 12 - N, N)) == 1
    assert chern_slope(THETA2) == (1, True)
    assert chern_slope(SurfaceRecord("extremal", 75, 25)) == (3, True)
    assert chern_slope(K3) == (0, True)
    assert chern_slope(SurfaceRecord("too steep", 10, 3))[1] is False
    assert not signature_is_integral(SurfaceRecord("bogus", 1, 1))


def test_catalog_signature_identity():
    for e in builtin_catalog():
        if e.surface is not None:
            s = e.surface
            assert s.c1sq - 2 * s.c2 - 3 * surface_signature(s) == 0
            assert signature_is_integral(s)


def test_proportionality():
    assert proportionality_check(K3.to_chern_record(), ENRIQUES.to_chern_record()) == 2
    assert proportionality_check(CP2.to_chern_record(), CP2.to_chern_record()) == 1
    for n in range(1, 5):
        for k in range(1, 4):
            assert proportionality_check(theta_record(n, k), theta_record(n)) == k ** (n + 1)
    assert proportionality_check(cpn_record(2), THETA2.to_chern_record()) is None
    with pytest.raises(ValueError):
        proportionality_check(cpn_record(2), cpn_record(3))


def test_proportionality_zero_handling():
    a = ChernRecord("a", 2, "tangent", {(2,): 0, (1, 1): 0})
    b = ChernRecord("b", 2, "tangent", {(2,): 0, (1, 1): 5})
    assert proportionality_check(a, b) == 0
    assert proportionality_check(b, a) is None


def test_catalog_contents():
    cat = {e.name: e for e in builtin_catalog()}
    f3 = cat["F_3 = U(3)/T^3"].record
    assert f3.numbers == {(3,): -6, (2, 1): 6, (1, 1, 1): 6}
    v = gcd_chern_numbers(f3)
    assert (v.d, v.chi, v.extremely_divisible) == (6, 6, True)
    xpi = cat["permutohedral 3-fold X_Pi"].record
    assert not xpi.complete
    assert not gcd_chern_numbers(xpi).extremely_divisible
    assert any(e.kind == "flag" for e in cat.values())
    assert SurfaceRecord.from_chern_record(cat["K3"].record) == SurfaceRecord("K3", 0, 24)
