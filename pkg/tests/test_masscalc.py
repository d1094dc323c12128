from fractions import Fraction

import mpmath
import pytest

from zetamass.exactmath import make_context
from zetamass.masscalc import (
    MassTable,
    QPower,
    compositions,
    ff_mass_table,
    frac,
    hn_series_partial,
    inversion_consistency,
    ks_coefficient,
    ks_total_from_semistable,
    nf_mass_table,
    semistable_mass,
    siegel_volume_nf,
    total_mass_ff,
    weng_coefficients,
    weng_semistable_volume_nf,
    wz_average_identity,
    wz_individual_mass,
    zagier_semistable_mass,
)


def test_compositions():
    assert compositions(1) == [(1,)]
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(compositions(5)) == 16
    with pytest.raises(ValueError):
        compositions(0)


def test_fractional_part_convention():
    assert frac(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac(Fraction(7, 2)) == Fraction(1, 2)


def test_qpower_integrality():
    p = QPower(Fraction(2), Fraction(2, 3)) * QPower(Fraction(2), Fraction(4, 3))
    assert p.materialize() == 4
    with pytest.raises(ArithmeticError, match="non-integral exponent"):
        QPower(Fraction(2), Fraction(1, 2)).materialize()


def test_total_mass(E2):
    assert [total_mass_ff(E2, n) for n in (1, 2, 3)] == [3, 9, Fraction(99, 7)]


def test_zagier_values(E2):
    assert zagier_semistable_mass(E2, 2, 0) == 6
    assert zagier_semistable_mass(E2, 2, 1) == 3
    assert zagier_semistable_mass(E2, 3, 0) == Fraction(66, 7)
    assert zagier_semistable_mass(E2, 3, 1) == 3
    assert zagier_semistable_mass(E2, 3, 2) == 3


def test_degree_periodicity(E2, E2b, genus2):
    for c in (E2, E2b, genus2):
        for n in (2, 3):
            for d in range(-n, n):
                assert zagier_semistable_mass(c, n, d) == zagier_semistable_mass(c, n, d + n)


def test_normalization_is_trivial_in_genus_one(E2, E2b):
    for c in (E2, E2b):
        for n in (1, 2, 3):
            for d in range(n):
                assert semistable_mass(c, n, d) == zagier_semistable_mass(c, n, d)


def test_hn_series(E2):
    assert hn_series_partial(E2, 2, 0, 0).partial_sum == 6
    for J in range(7):
        p = hn_series_partial(E2, 2, 0, 2 * J)
        assert p.partial_sum == 9 - 3 * Fraction(1, 4**J)
    assert hn_series_partial(E2, 2, 0, 10).partial_sum == 9 - Fraction(3, 1024)
    for cap in (0, 3, 8):
        assert hn_series_partial(E2, 1, 5, cap).partial_sum == 3


def test_hn_series_monotone(E2b, genus2):
    for c in (E2b, genus2):
        prev = Fraction(-1)
        for cap in range(0, 12):
            s = hn_series_partial(c, 2, 0, cap).partial_sum
            assert s >= prev
            prev = s
        assert prev < total_mass_ff(c, 2) * Fraction(c.q) ** (c.g - 1) + 1


def test_hn_series_limit_on_other_fixtures(E2b):
    # genus 1: the weighted HN sum converges to the total mass
    p = hn_series_partial(E2b, 2, 0, 40)
    assert abs(float(total_mass_ff(E2b, 2) - p.partial_sum)) < 1e-9


def test_average_identity(E2, E2b, genus2):
    chk = wz_average_identity(E2, 2)
    assert chk.lhs == chk.rhs == 18
    chk = wz_average_identity(E2, 3)
    assert chk.lhs == chk.rhs == Fraction(297, 7)
    for n in range(1, 5):
        assert wz_average_identity(E2, n).passed
    for n in range(1, 4):
        assert wz_average_identity(E2b, n).passed
        assert wz_average_identity(genus2, n).passed
    assert wz_average_identity(genus2, 1).lhs == total_mass_ff(genus2, 1)


def test_individual_mass(E2, E2b):
    r0 = wz_individual_mass(E2, 2, 0)
    r1 = wz_individual_mass(E2, 2, 1)
    assert abs(r0.value.value - 12) < 1e-30 and abs(r1.value.value - 6) < 1e-30
    assert abs(r0.deviation.value - 3) < 1e-30
    for c in (E2, E2b):
        for n in (1, 2, 3):
            vals = [wz_individual_mass(c, n, d).value.value for d in range(n)]
            assert abs(sum(vals) / n - total_mass_ff(c, n)) < 1e-25


def test_siegel_values():
    ctx = make_context(200)
    assert abs(siegel_volume_nf(1, 200).value - 1) < 1e-55
    assert abs(siegel_volume_nf(2, 200).value - ctx.pi / 6) < 1e-55
    ref3 = ctx.pi / 6 * ctx.zeta(3) / (2 * ctx.pi)
    assert abs(siegel_volume_nf(3, 200).value - ref3) < 1e-50
    vals = [siegel_volume_nf(n, 128).value for n in range(2, 9)]
    assert all(v > 0 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_weng_values():
    ctx = make_context(200)
    assert abs(weng_semistable_volume_nf(1, 200).value - 1) < 1e-55
    assert abs(weng_semistable_volume_nf(2, 200).value - (ctx.pi / 6 - ctx.mpf(1) / 2)) < 1e-55
    m2, m3 = siegel_volume_nf(2, 200).value, siegel_volume_nf(3, 200).value
    assert abs(weng_semistable_volume_nf(3, 200).value - (m3 - ctx.mpf(2) / 3 * m2 + ctx.mpf(1) / 4)) < 1e-55
    for n in range(1, 6):
        assert weng_semistable_volume_nf(n, 128).value > 0
    assert weng_coefficients(3) == {(1, 1, 1): Fraction(1, 4), (1, 2): Fraction(-1, 3), (2, 1): Fraction(-1, 3), (3,): 1}


def test_ks_coefficients():
    assert ks_coefficient((1, 1), "A") == Fraction(1, 2)
    assert ks_coefficient((1, 1, 1), "A") == Fraction(1, 12)
    assert ks_coefficient((1, 1), "B") == Fraction(1, 2)
    with pytest.raises(ValueError):
        ks_coefficient((1,), "C")
    one = ks_total_from_semistable(1, {1: weng_semistable_volume_nf(1, 128)}, "A", 128)
    assert abs(one.value - 1) < 1e-30


def test_inversion_report():
    rep = inversion_consistency(3)
    rows = {r["n"]: r["conventions"] for r in rep["ranks"]}
    assert rows[1]["A"]["closes"] and rows[1]["B"]["closes"]
    assert rows[2]["A"]["residual"] == {"m1*m1": "1/4"}
    assert not rows[2]["A"]["closes"]
    assert set(rows[3]["A"]) == {"closes", "residual", "residual_text"}


def test_mass_table_roundtrip(E2):
    t = ff_mass_table(E2, 3, "semistable_normalized")
    assert t[(3, 0)] == Fraction(66, 7)
    back = MassTable.from_text(t.to_text())
    assert back.entries == t.entries
    nt = nf_mass_table(3, 128, "total")
    back = MassTable.from_text(nt.to_text())
    assert back.to_text() == nt.to_text()
    with pytest.raises(ValueError):
        MassTable.from_text('{"kind": "total", "field": "x", "entries": {}}')
